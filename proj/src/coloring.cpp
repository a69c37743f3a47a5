#include "biquandle/coloring.hpp"

#include <algorithm>
#include <array>

namespace biq {

namespace {

// Positions within a crossing record.
enum Pos { u_in = 0, o_in = 1, u_out = 2, o_out = 3 };

std::array<SemiarcId, 4> ends(const Crossing& x) { return {x.under_in, x.over_in, x.under_out, x.over_out}; }

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "coloring count exceeds 2^64");
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

/// Every consistent 4-tuple at a crossing of each sign, indexed by the values
/// at any two positions.
class RelationTables {
public:
  explicit RelationTables(const FiniteBiquandle& y) : n_(y.size()) {
    for (Element a = 1; a <= n_; ++a) {
      for (Element b = 1; b <= n_; ++b) {
        // a, b are the left under and left over labels.
        const Element right_under = y.under(a, b);
        const Element right_over = y.over(b, a);
        tuples_[0].push_back({a, right_over, right_under, b});
        tuples_[1].push_back({right_under, b, a, right_over});
      }
    }
    for (int sign = 0; sign < 2; ++sign) {
      int pair = 0;
      for (int p = 0; p < 4; ++p) {
        for (int q = p + 1; q < 4; ++q, ++pair) {
          auto& index = index_[sign][pair];
          index.assign(static_cast<std::size_t>(n_ * n_), {});
          for (std::size_t t = 0; t < tuples_[sign].size(); ++t) {
            const auto& tup = tuples_[sign][t];
            index[static_cast<std::size_t>((tup[p] - 1) * n_ + (tup[q] - 1))].push_back(static_cast<int>(t));
          }
        }
      }
    }
  }

  static int pair_index(int p, int q) {
    static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[p][q];
  }

  const std::vector<int>& candidates(int sign, int p, int q, Element a, Element b) const {
    return index_[sign][pair_index(p, q)][static_cast<std::size_t>((a - 1) * n_ + (b - 1))];
  }
  const std::array<Element, 4>& tuple(int sign, int t) const { return tuples_[sign][static_cast<std::size_t>(t)]; }

private:
  int n_;
  std::vector<std::array<Element, 4>> tuples_[2];
  std::vector<std::vector<int>> index_[2][6];
};

/// Worklist propagation with branching only when propagation stalls.
class ColoringSearch {
public:
  ColoringSearch(const SemiarcDiagram& d, const FiniteBiquandle& y)
      : d_(d), n_(y.size()), tables_(y), value_(static_cast<std::size_t>(d.semiarc_count()), 0) {}

  template <typename Visit>
  void run(Visit&& visit) {
    if (d_.semiarc_count() == 0) {
      visit(value_);
      return;
    }
    search(visit);
  }

private:
  template <typename Visit>
  void search(Visit& visit) {
    const SemiarcId next = pick_branch();
    if (next == -1) {
      visit(value_);
      return;
    }
    for (Element v = 1; v <= n_; ++v) {
      const std::size_t mark = trail_.size();
      if (assign(next, v) && propagate()) search(visit);
      while (trail_.size() > mark) {
        value_[static_cast<std::size_t>(trail_.back())] = 0;
        trail_.pop_back();
      }
      work_.clear();
    }
  }

  bool assign(SemiarcId s, Element v) {
    auto& slot = value_[static_cast<std::size_t>(s)];
    if (slot != 0) return slot == v;
    slot = v;
    trail_.push_back(s);
    work_.push_back(s);
    return true;
  }

  bool propagate() {
    while (!work_.empty()) {
      const SemiarcId s = work_.back();
      work_.pop_back();
      for (int c : {d_.source_crossing(s), d_.target_crossing(s)})
        if (!settle(d_.crossings()[static_cast<std::size_t>(c)])) return false;
    }
    return true;
  }

  /// Narrows the crossing's consistent tuples by its known semiarcs and fixes
  /// every unknown position on which all survivors agree.
  bool settle(const Crossing& x) {
    const auto id = ends(x);
    int known[4];
    int nknown = 0;
    for (int p = 0; p < 4; ++p)
      if (value_[static_cast<std::size_t>(id[p])] != 0) known[nknown++] = p;
    if (nknown < 2) return true;
    const int sign = x.sign == Sign::positive ? 0 : 1;
    const auto& cands = tables_.candidates(sign, known[0], known[1], value_[static_cast<std::size_t>(id[known[0]])],
                                           value_[static_cast<std::size_t>(id[known[1]])]);
    std::array<Element, 4> agreed{0, 0, 0, 0};
    bool any = false;
    for (int t : cands) {
      const auto& tup = tables_.tuple(sign, t);
      bool ok = true;
      for (int p = 0; p < 4 && ok; ++p) {
        const Element v = value_[static_cast<std::size_t>(id[p])];
        if (v != 0 && tup[p] != v) ok = false;
        for (int q = p + 1; q < 4 && ok; ++q)
          if (id[p] == id[q] && tup[p] != tup[q]) ok = false;
      }
      if (!ok) continue;
      if (!any) {
        agreed = tup;
        any = true;
      } else {
        for (int p = 0; p < 4; ++p)
          if (agreed[p] != tup[p]) agreed[p] = 0;
      }
    }
    if (!any) return false;
    for (int p = 0; p < 4; ++p)
      if (agreed[p] != 0 && !assign(id[p], agreed[p])) return false;
    return true;
  }

  /// Uncolored semiarc touching the most colored crossing positions; lowest id
  /// on ties. -1 when everything is colored.
  SemiarcId pick_branch() const {
    SemiarcId best = -1;
    int best_score = -1;
    for (SemiarcId s = 0; s < d_.semiarc_count(); ++s) {
      if (value_[static_cast<std::size_t>(s)] != 0) continue;
      int score = 0;
      for (int c : {d_.source_crossing(s), d_.target_crossing(s)})
        for (SemiarcId t : ends(d_.crossings()[static_cast<std::size_t>(c)]))
          if (value_[static_cast<std::size_t>(t)] != 0) ++score;
      if (score > best_score) {
        best = s;
        best_score = score;
      }
    }
    return best;
  }

  const SemiarcDiagram& d_;
  int n_;
  RelationTables tables_;
  std::vector<Element> value_;
  std::vector<SemiarcId> trail_;
  std::vector<SemiarcId> work_;
};

}  // namespace

bool is_coloring(const SemiarcDiagram& d, const FiniteBiquandle& y, const Coloring& c) {
  if (static_cast<int>(c.size()) != d.semiarc_count()) return false;
  for (Element v : c)
    if (v < 1 || v > y.size()) return false;
  for (const auto& x : d.crossings()) {
    const auto s = sides(x);
    const Element lu = c[s.left_under], lo = c[s.left_over];
    if (c[s.right_under] != y.under(lu, lo) || c[s.right_over] != y.over(lo, lu)) return false;
  }
  return true;
}

std::vector<Coloring> enumerate_colorings(const SemiarcDiagram& d, const FiniteBiquandle& y) {
  std::vector<Coloring> out;
  ColoringSearch(d, y).run([&](const std::vector<Element>& v) { out.push_back(v); });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_colorings(const SemiarcDiagram& d, const FiniteBiquandle& y) {
  std::uint64_t count = 0;
  ColoringSearch(d, y).run([&](const std::vector<Element>&) { ++count; });
  return checked_mul(count, checked_pow(static_cast<std::uint64_t>(y.size()), d.free_loops()));
}

std::vector<Coloring> enumerate_full_colorings(const SemiarcDiagram& d, const FiniteBiquandle& y) {
  auto base = enumerate_colorings(d, y);
  const int loops = d.free_loops();
  if (loops == 0) return base;
  checked_mul(base.size(), checked_pow(static_cast<std::uint64_t>(y.size()), loops));
  std::vector<Coloring> out;
  for (const auto& c : base) {
    std::vector<Element> tail(static_cast<std::size_t>(loops), 1);
    while (true) {
      Coloring full = c;
      full.insert(full.end(), tail.begin(), tail.end());
      out.push_back(std::move(full));
      int i = loops - 1;
      while (i >= 0 && tail[static_cast<std::size_t>(i)] == y.size()) tail[static_cast<std::size_t>(i--)] = 1;
      if (i < 0) break;
      ++tail[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

std::vector<Coloring> brute_force_colorings(const SemiarcDiagram& d, const FiniteBiquandle& y, std::uint64_t limit) {
  const int m = d.semiarc_count();
  std::uint64_t total = 1;
  for (int i = 0; i < m; ++i) {
    total *= static_cast<std::uint64_t>(y.size());
    if (total > limit)
      throw Error(ErrorKind::size_guard, "brute force over " + std::to_string(y.size()) + "^" + std::to_string(m) +
                                             " assignments exceeds limit " + std::to_string(limit));
  }
  std::vector<Coloring> out;
  Coloring c(static_cast<std::size_t>(m), 1);
  while (true) {
    if (is_coloring(d, y, c)) out.push_back(c);
    int i = m - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == y.size()) c[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
  }
  return out;
}

RelationMatrix coloring_matrix(const SemiarcDiagram& d, const FiniteBiquandle& y) {
  auto form = y.linear_form();
  if (!form) throw Error(ErrorKind::invalid_parameter, "target biquandle is not linear over Z/n");
  return coloring_matrix(d, *form);
}

RelationMatrix coloring_matrix(const SemiarcDiagram& d, const LinearForm& f) {
  RelationMatrix m;
  const int k = d.crossing_count();
  m.rows = 2 * k;
  m.cols = d.semiarc_count();
  m.modulus = f.modulus;
  m.entries.assign(static_cast<std::size_t>(m.rows * m.cols), 0);
  for (int i = 0; i < k; ++i) {
    // a·lo + b·lu - ro and c·lu + d·lo - ru.
    const auto s = sides(d.crossings()[static_cast<std::size_t>(i)]);
    m.at(i, s.left_over) += f.a;
    m.at(i, s.left_under) += f.b;
    m.at(i, s.right_over) -= 1;
    m.at(k + i, s.left_under) += f.c;
    m.at(k + i, s.left_over) += f.d;
    m.at(k + i, s.right_under) -= 1;
  }
  for (auto& e : m.entries) {
    e %= f.modulus;
    if (e < 0) e += f.modulus;
  }
  return m;
}

std::uint64_t count_colorings_linear(const SemiarcDiagram& d, const FiniteBiquandle& y) {
  return checked_mul(count_solutions_snf(coloring_matrix(d, y)),
                     checked_pow(static_cast<std::uint64_t>(y.size()), d.free_loops()));
}

}  // namespace biq
