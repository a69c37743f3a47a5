#include "biquandle/algebra.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace biq {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::shape: return "shape";
    case ErrorKind::axiom_violation: return "axiom-violation";
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_diagram: return "invalid-diagram";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::size_guard: return "size-guard";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::shape: return "shape";
    case Axiom::diagonal: return "diagonal";
    case Axiom::over_column_bijective: return "over-column-bijective";
    case Axiom::under_column_bijective: return "under-column-bijective";
    case Axiom::sideways_bijective: return "sideways-bijective";
    case Axiom::exchange_over_over: return "exchange-over-over";
    case Axiom::exchange_under_over: return "exchange-under-over";
    case Axiom::exchange_under_under: return "exchange-under-under";
  }
  return "unknown";
}

namespace {

std::int64_t residue(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

Element element_of_residue(std::int64_t r, std::int64_t n) {
  r = residue(r, n);
  return static_cast<Element>(r == 0 ? n : r);
}

std::string tuple_text(const std::vector<Element>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

std::optional<std::string> shape_problem(const BiquandleTables& t) {
  const std::size_t n = t.over.size();
  if (n == 0) return "over table is empty";
  if (t.under.size() != n)
    return "under table has " + std::to_string(t.under.size()) + " rows, expected " + std::to_string(n);
  for (const Table* table : {&t.over, &t.under}) {
    const char* name = table == &t.over ? "over" : "under";
    for (std::size_t r = 0; r < n; ++r) {
      if ((*table)[r].size() != n)
        return std::string(name) + " table row " + std::to_string(r + 1) + " has " +
               std::to_string((*table)[r].size()) + " entries, expected " + std::to_string(n);
      for (std::size_t c = 0; c < n; ++c) {
        Element v = (*table)[r][c];
        if (v < 1 || v > static_cast<Element>(n))
          return std::string(name) + " table entry [" + std::to_string(r + 1) + "][" + std::to_string(c + 1) +
                 "] = " + std::to_string(v) + " is outside 1.." + std::to_string(n);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += std::string(to_string(v.axiom)) + ": " + v.message;
  }
  return s;
}

ValidationReport validate_axioms(const BiquandleTables& t) {
  ValidationReport report;
  if (auto problem = shape_problem(t)) {
    report.violations.push_back({Axiom::shape, {}, *problem});
    return report;
  }
  const int n = static_cast<int>(t.over.size());
  auto ov = [&](Element x, Element y) { return t.over[x - 1][y - 1]; };
  auto un = [&](Element x, Element y) { return t.under[x - 1][y - 1]; };
  auto add = [&](Axiom a, std::vector<Element> w, std::string msg) {
    report.violations.push_back({a, std::move(w), std::move(msg)});
  };

  for (Element x = 1; x <= n; ++x) {
    if (ov(x, x) != un(x, x)) {
      add(Axiom::diagonal, {x},
          "x=" + std::to_string(x) + ": x over x = " + std::to_string(ov(x, x)) + " but x under x = " +
              std::to_string(un(x, x)));
      break;
    }
  }

  auto check_columns = [&](Axiom axiom, auto op, const char* name) {
    for (Element y = 1; y <= n; ++y) {
      std::vector<Element> seen(static_cast<std::size_t>(n) + 1, 0);
      for (Element x = 1; x <= n; ++x) {
        Element z = op(x, y);
        if (seen[z]) {
          add(axiom, {y, seen[z], x},
              std::string("column ") + std::to_string(y) + " of " + name + " maps " + std::to_string(seen[z]) +
                  " and " + std::to_string(x) + " to " + std::to_string(z));
          return;
        }
        seen[z] = x;
      }
    }
  };
  check_columns(Axiom::over_column_bijective, ov, "over");
  check_columns(Axiom::under_column_bijective, un, "under");

  {
    // S(x,y) = (y ⊼ x, x ⊻ y)
    std::vector<std::pair<Element, Element>> preimage(static_cast<std::size_t>(n * n), {0, 0});
    bool failed = false;
    for (Element x = 1; x <= n && !failed; ++x) {
      for (Element y = 1; y <= n && !failed; ++y) {
        std::size_t key = static_cast<std::size_t>((ov(y, x) - 1) * n + (un(x, y) - 1));
        if (preimage[key].first != 0) {
          auto [px, py] = preimage[key];
          add(Axiom::sideways_bijective, {px, py, x, y},
              "S" + tuple_text({px, py}) + " = S" + tuple_text({x, y}));
          failed = true;
        }
        preimage[key] = {x, y};
      }
    }
  }

  bool bad_oo = false, bad_uo = false, bad_uu = false;
  for (Element x = 1; x <= n; ++x) {
    for (Element y = 1; y <= n; ++y) {
      for (Element z = 1; z <= n; ++z) {
        if (!bad_oo && ov(ov(x, y), ov(z, y)) != ov(ov(x, z), un(y, z))) {
          bad_oo = true;
          add(Axiom::exchange_over_over, {x, y, z}, "fails at (x,y,z)=" + tuple_text({x, y, z}));
        }
        if (!bad_uo && ov(un(x, y), un(z, y)) != un(ov(x, z), ov(y, z))) {
          bad_uo = true;
          add(Axiom::exchange_under_over, {x, y, z}, "fails at (x,y,z)=" + tuple_text({x, y, z}));
        }
        if (!bad_uu && un(un(x, y), un(z, y)) != un(un(x, z), ov(y, z))) {
          bad_uu = true;
          add(Axiom::exchange_under_under, {x, y, z}, "fails at (x,y,z)=" + tuple_text({x, y, z}));
        }
      }
    }
  }
  return report;
}

FiniteBiquandle FiniteBiquandle::from_tables(const Table& over, const Table& under) {
  BiquandleTables t{over, under};
  auto report = validate_axioms(t);
  if (!report.ok()) {
    const auto& first = report.violations.front();
    throw Error(first.axiom == Axiom::shape ? ErrorKind::shape : ErrorKind::axiom_violation, report.summary());
  }
  FiniteBiquandle b;
  const int n = static_cast<int>(over.size());
  b.n_ = n;
  const auto cells = static_cast<std::size_t>(n * n);
  b.over_.resize(cells);
  b.under_.resize(cells);
  b.over_inv_.resize(cells);
  b.under_inv_.resize(cells);
  for (Element x = 1; x <= n; ++x) {
    for (Element y = 1; y <= n; ++y) {
      b.over_[b.index(x, y)] = over[x - 1][y - 1];
      b.under_[b.index(x, y)] = under[x - 1][y - 1];
      b.over_inv_[b.index(over[x - 1][y - 1], y)] = x;
      b.under_inv_[b.index(under[x - 1][y - 1], y)] = x;
    }
  }
  return b;
}

BiquandleTables operations_from_division(const BiquandleTables& printed) {
  if (auto problem = shape_problem(printed)) throw Error(ErrorKind::shape, *problem);
  const int n = static_cast<int>(printed.over.size());
  BiquandleTables t;
  t.over.assign(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n), 0));
  t.under = t.over;
  for (Element c = 1; c <= n; ++c) {
    for (Element w = 1; w <= n; ++w) {
      Element x = printed.over[w - 1][c - 1];
      if (t.over[x - 1][c - 1] != 0)
        throw Error(ErrorKind::axiom_violation,
                    std::string(to_string(Axiom::over_column_bijective)) + ": printed column " + std::to_string(c) +
                        " of over maps " + std::to_string(t.over[x - 1][c - 1]) + " and " + std::to_string(w) +
                        " to " + std::to_string(x));
      t.over[x - 1][c - 1] = w;
      Element y = printed.under[w - 1][c - 1];
      if (t.under[c - 1][y - 1] != 0)
        throw Error(ErrorKind::axiom_violation,
                    std::string(to_string(Axiom::under_column_bijective)) + ": printed column " +
                        std::to_string(c) + " of under maps " + std::to_string(t.under[c - 1][y - 1]) + " and " +
                        std::to_string(w) + " to " + std::to_string(y));
      t.under[c - 1][y - 1] = w;
    }
  }
  return t;
}

FiniteBiquandle FiniteBiquandle::from_division_tables(const BiquandleTables& printed) {
  return from_tables(operations_from_division(printed));
}

bool FiniteBiquandle::is_quandle() const noexcept {
  for (Element x = 1; x <= n_; ++x)
    for (Element y = 1; y <= n_; ++y)
      if (over(x, y) != x) return false;
  return true;
}

BiquandleTables FiniteBiquandle::tables() const {
  BiquandleTables t;
  t.over.assign(static_cast<std::size_t>(n_), std::vector<Element>(static_cast<std::size_t>(n_)));
  t.under = t.over;
  for (Element x = 1; x <= n_; ++x) {
    for (Element y = 1; y <= n_; ++y) {
      t.over[x - 1][y - 1] = over(x, y);
      t.under[x - 1][y - 1] = under(x, y);
    }
  }
  return t;
}

std::optional<LinearForm> FiniteBiquandle::linear_form() const {
  const std::int64_t n = n_;
  auto res = [&](Element e) { return residue(e, n); };
  // Residue 0 is element n; probe with (1,0) and (0,1).
  LinearForm f{n, res(over(1, n_)), res(over(n_, 1)), res(under(1, n_)), res(under(n_, 1))};
  for (Element x = 1; x <= n_; ++x) {
    for (Element y = 1; y <= n_; ++y) {
      if (res(over(x, y)) != residue(f.a * x + f.b * y, n)) return std::nullopt;
      if (res(under(x, y)) != residue(f.c * x + f.d * y, n)) return std::nullopt;
    }
  }
  return f;
}

Quandle::Quandle(FiniteBiquandle b) : b_(std::move(b)) {
  if (!b_.is_quandle()) throw Error(ErrorKind::invalid_parameter, "biquandle is not a quandle (x over y != x)");
}

Quandle make_dihedral(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_parameter, "dihedral quandle order must be >= 1, got " + std::to_string(n));
  Table over(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n)));
  Table under = over;
  for (Element x = 1; x <= n; ++x) {
    for (Element y = 1; y <= n; ++y) {
      over[x - 1][y - 1] = x;
      under[x - 1][y - 1] = element_of_residue(2 * y - x, n);
    }
  }
  return Quandle(FiniteBiquandle::from_tables(over, under));
}

FiniteBiquandle make_linear_biquandle(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c,
                                      std::int64_t d) {
  if (n < 1) throw Error(ErrorKind::invalid_parameter, "modulus must be >= 1, got " + std::to_string(n));
  if (n > 4096) throw Error(ErrorKind::invalid_parameter, "modulus too large for table encoding");
  const auto sz = static_cast<std::size_t>(n);
  Table over(sz, std::vector<Element>(sz));
  Table under = over;
  for (std::int64_t x = 1; x <= n; ++x) {
    for (std::int64_t y = 1; y <= n; ++y) {
      over[x - 1][y - 1] = element_of_residue(residue(a, n) * x + residue(b, n) * y, n);
      under[x - 1][y - 1] = element_of_residue(residue(c, n) * x + residue(d, n) * y, n);
    }
  }
  return FiniteBiquandle::from_tables(over, under);
}

FiniteBiquandle biquandle_t() {
  return FiniteBiquandle::from_division_tables({{{1, 3, 4, 2}, {3, 1, 2, 4}, {2, 4, 3, 1}, {4, 2, 1, 3}},
                                                {{1, 4, 2, 3}, {2, 3, 1, 4}, {4, 1, 3, 2}, {3, 2, 4, 1}}});
}

FiniteBiquandle biquandle_z() { return make_linear_biquandle(4, 3, 0, 1, 2); }

FiniteBiquandle example_biquandle_4() {
  return FiniteBiquandle::from_division_tables({{{2, 3, 1, 4}, {3, 2, 4, 1}, {4, 1, 3, 2}, {1, 4, 2, 3}},
                                                {{3, 1, 2, 4}, {4, 2, 1, 3}, {2, 4, 3, 1}, {1, 3, 4, 2}}});
}

bool is_homomorphism(const FiniteBiquandle& source, const FiniteBiquandle& target,
                     const std::vector<Element>& f) {
  if (static_cast<int>(f.size()) != source.size()) return false;
  for (Element v : f)
    if (v < 1 || v > target.size()) return false;
  for (Element x = 1; x <= source.size(); ++x) {
    for (Element y = 1; y <= source.size(); ++y) {
      if (f[source.over(x, y) - 1] != target.over(f[x - 1], f[y - 1])) return false;
      if (f[source.under(x, y) - 1] != target.under(f[x - 1], f[y - 1])) return false;
    }
  }
  return true;
}

namespace {

class HomSearch {
public:
  HomSearch(const FiniteBiquandle& source, const FiniteBiquandle& target)
      : src_(source), dst_(target), f_(static_cast<std::size_t>(source.size()) + 1, 0) {}

  std::vector<std::vector<Element>> run() {
    search();
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

private:
  bool assign(Element i, Element v, std::vector<Element>& trail) {
    std::deque<Element> work;
    f_[i] = v;
    trail.push_back(i);
    work.push_back(i);
    while (!work.empty()) {
      Element a = work.front();
      work.pop_front();
      for (Element b = 1; b <= src_.size(); ++b) {
        if (!f_[b]) continue;
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
          for (int which = 0; which < 2; ++which) {
            Element p = which ? src_.under(x, y) : src_.over(x, y);
            Element want = which ? dst_.under(f_[x], f_[y]) : dst_.over(f_[x], f_[y]);
            if (f_[p] == 0) {
              f_[p] = want;
              trail.push_back(p);
              work.push_back(p);
            } else if (f_[p] != want) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  void search() {
    Element next = 0;
    for (Element i = 1; i <= src_.size(); ++i) {
      if (!f_[i]) {
        next = i;
        break;
      }
    }
    if (next == 0) {
      out_.emplace_back(f_.begin() + 1, f_.end());
      return;
    }
    for (Element v = 1; v <= dst_.size(); ++v) {
      std::vector<Element> trail;
      if (assign(next, v, trail)) search();
      for (Element i : trail) f_[i] = 0;
    }
  }

  const FiniteBiquandle& src_;
  const FiniteBiquandle& dst_;
  std::vector<Element> f_;
  std::vector<std::vector<Element>> out_;
};

}  // namespace

std::vector<std::vector<Element>> enumerate_homs(const FiniteBiquandle& source, const FiniteBiquandle& target) {
  return HomSearch(source, target).run();
}

std::vector<Endomorphism> enumerate_endos(const FiniteBiquandle& b) {
  std::vector<Endomorphism> out;
  for (auto& images : enumerate_homs(b, b)) out.push_back(Endomorphism{std::move(images)});
  return out;
}

Endomorphism affine_map(int n, std::int64_t a, std::int64_t b) {
  if (n < 1) throw Error(ErrorKind::invalid_parameter, "map degree must be >= 1");
  Endomorphism f;
  for (std::int64_t x = 1; x <= n; ++x) f.images.push_back(element_of_residue(residue(a, n) * x + residue(b, n), n));
  return f;
}

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
  const auto n = images_.size();
  std::vector<char> seen(n + 1, 0);
  for (Element v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorKind::invalid_parameter, "image array is not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Element> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.degree() != degree()) throw Error(ErrorKind::invalid_parameter, "permutation degrees differ");
  std::vector<Element> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)(other.images_[i]);
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<Element> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[static_cast<std::size_t>(images_[i] - 1)] = static_cast<Element>(i + 1);
  return Permutation(std::move(out));
}

std::uint64_t Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
      seen[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<Element>(i + 1)) return false;
  return true;
}

Permutation column_permutation(const Quandle& q, Element y) {
  if (y < 1 || y > q.size())
    throw Error(ErrorKind::invalid_parameter, "column " + std::to_string(y) + " out of range 1.." + std::to_string(q.size()));
  std::vector<Element> images(static_cast<std::size_t>(q.size()));
  for (Element x = 1; x <= q.size(); ++x) images[x - 1] = q.op(x, y);
  return Permutation(std::move(images));
}

namespace {

struct ImagesHash {
  std::size_t operator()(const std::vector<Element>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Element e : v) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

std::uint64_t group_order(const std::vector<Permutation>& gens, std::size_t cap) {
  if (gens.empty()) return 1;
  const int n = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != n) throw Error(ErrorKind::invalid_parameter, "generators act on different ground sets");

  std::unordered_set<std::vector<Element>, ImagesHash> seen;
  std::deque<Permutation> queue;
  auto id = Permutation::identity(n);
  seen.insert(id.images());
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation g = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      Permutation h = s.compose(g);
      if (seen.insert(h.images()).second) {
        if (seen.size() > cap)
          throw Error(ErrorKind::overflow, "permutation group exceeds exploration cap of " + std::to_string(cap));
        queue.push_back(std::move(h));
      }
    }
  }
  return seen.size();
}

std::vector<Element> subquandle_closure(const Quandle& q, const std::vector<Element>& s) {
  if (s.empty()) throw Error(ErrorKind::invalid_parameter, "subquandle closure of the empty set");
  std::vector<char> in(static_cast<std::size_t>(q.size()) + 1, 0);
  std::vector<Element> members;
  for (Element x : s) {
    if (x < 1 || x > q.size()) throw Error(ErrorKind::invalid_parameter, "element " + std::to_string(x) + " out of range");
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        for (Element z : {q.op(members[i], members[j]), q.op_inverse(members[j], members[i])}) {
          if (!in[z]) {
            in[z] = 1;
            members.push_back(z);
            grew = true;
          }
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

BiquandleTables parse_biquandle_tables(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<long long> values;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse, "biquandle file: '" + token + "' is not an integer");
    }
  }
  if (values.empty()) throw Error(ErrorKind::parse, "biquandle file is empty");
  const long long n = values.front();
  if (n < 1 || n > 4096) throw Error(ErrorKind::parse, "biquandle file: bad size " + std::to_string(n));
  if (static_cast<long long>(values.size()) != 1 + 2 * n * n)
    throw Error(ErrorKind::shape, "biquandle file: expected " + std::to_string(2 * n * n) + " table entries, found " +
                                      std::to_string(values.size() - 1));
  BiquandleTables t;
  std::size_t k = 1;
  for (Table* table : {&t.over, &t.under}) {
    table->assign(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n)));
    for (auto& row : *table)
      for (auto& cell : row) cell = static_cast<Element>(values[k++]);
  }
  return t;
}

FiniteBiquandle parse_biquandle(std::string_view text) { return FiniteBiquandle::from_tables(parse_biquandle_tables(text)); }

std::string serialize_biquandle(const FiniteBiquandle& b) {
  std::ostringstream out;
  out << b.size() << '\n';
  auto t = b.tables();
  for (const Table* table : {&t.over, &t.under}) {
    if (table == &t.under) out << '\n';
    for (const auto& row : *table) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace biq
