#include "biquandle/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "planar.hpp"

namespace biq {

namespace {

std::string at_line(const std::vector<int>* lines, std::size_t crossing) {
  if (!lines) return "crossing " + std::to_string(crossing) + ": ";
  return "line " + std::to_string((*lines)[crossing]) + ": ";
}

/// Head/tail bookkeeping shared by the constructor and the parser (which
/// knows line numbers).
void check_semiarcs(int count, const std::vector<Crossing>& crossings, const std::vector<int>* lines,
                    std::vector<int>& source, std::vector<int>& target) {
  if (count < 0) throw Error(ErrorKind::invalid_diagram, "negative semiarc count");
  source.assign(static_cast<std::size_t>(count), -1);
  target.assign(static_cast<std::size_t>(count), -1);
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    const auto& x = crossings[c];
    for (SemiarcId s : {x.under_in, x.over_in, x.under_out, x.over_out}) {
      if (s < 0 || s >= count)
        throw Error(ErrorKind::invalid_diagram,
                    at_line(lines, c) + "semiarc " + std::to_string(s) + " is outside 0.." + std::to_string(count - 1));
    }
    for (SemiarcId s : {x.under_in, x.over_in}) {
      if (target[s] != -1)
        throw Error(ErrorKind::invalid_diagram, at_line(lines, c) + "semiarc " + std::to_string(s) +
                                                    " enters two crossings (duplicate head)");
      target[s] = static_cast<int>(c);
    }
    for (SemiarcId s : {x.under_out, x.over_out}) {
      if (source[s] != -1)
        throw Error(ErrorKind::invalid_diagram, at_line(lines, c) + "semiarc " + std::to_string(s) +
                                                    " leaves two crossings (duplicate tail)");
      source[s] = static_cast<int>(c);
    }
  }
  for (SemiarcId s = 0; s < count; ++s) {
    if (source[s] == -1 && target[s] == -1)
      throw Error(ErrorKind::invalid_diagram, "semiarc " + std::to_string(s) + " is never used");
    if (source[s] == -1)
      throw Error(ErrorKind::invalid_diagram, at_line(lines, static_cast<std::size_t>(target[s])) + "semiarc " +
                                                  std::to_string(s) + " has no source (never leaves a crossing)");
    if (target[s] == -1)
      throw Error(ErrorKind::invalid_diagram, at_line(lines, static_cast<std::size_t>(source[s])) + "semiarc " +
                                                  std::to_string(s) + " has no target (never enters a crossing)");
  }
}

int parse_int(std::string_view token, int line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw Error(ErrorKind::parse, "line " + std::to_string(line) + ": '" + std::string(token) + "' is not an integer");
  return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

SemiarcId replace_input(Crossing& x, SemiarcId from, SemiarcId to) {
  if (x.under_in == from) {
    x.under_in = to;
    return to;
  }
  if (x.over_in == from) {
    x.over_in = to;
    return to;
  }
  throw Error(ErrorKind::internal, "semiarc is not an input of its target crossing");
}

void require_semiarc(const SemiarcDiagram& d, SemiarcId s, const char* what) {
  if (s < 0 || s >= d.semiarc_count())
    throw Error(ErrorKind::invalid_parameter, std::string(what) + " semiarc " + std::to_string(s) +
                                                  " does not exist (diagram has " +
                                                  std::to_string(d.semiarc_count()) + ")");
}

}  // namespace

SemiarcDiagram::SemiarcDiagram(int semiarc_count, std::vector<Crossing> crossings, int free_loops)
    : semiarc_count_(semiarc_count), crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops < 0) throw Error(ErrorKind::invalid_diagram, "negative free loop count");
  check_semiarcs(semiarc_count_, crossings_, nullptr, source_, target_);
}

int SemiarcDiagram::component_count() const {
  std::vector<char> seen(static_cast<std::size_t>(semiarc_count_), 0);
  int components = free_loops_;
  for (SemiarcId start = 0; start < semiarc_count_; ++start) {
    if (seen[start]) continue;
    ++components;
    SemiarcId s = start;
    while (!seen[s]) {
      seen[s] = 1;
      const auto& x = crossings_[static_cast<std::size_t>(target_crossing(s))];
      s = x.under_in == s ? x.under_out : x.over_out;
    }
  }
  return components;
}

SemiarcDiagram parse_pd(std::string_view text) {
  struct Virtual {
    int a_in, b_in, a_out, b_out;
  };
  std::vector<Crossing> crossings;
  std::vector<int> lines;
  std::vector<Virtual> virtuals;
  int free_loops = 0;
  int max_id = -1;

  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t piece_start = 0;
    while (piece_start <= line.size()) {
      std::size_t semi = line.find(';', piece_start);
      if (semi == std::string_view::npos) semi = line.size();
      auto tokens = split_ws(line.substr(piece_start, semi - piece_start));
      piece_start = semi + 1;
      if (tokens.empty()) continue;

      const auto head = tokens[0];
      if (head == "L") {
        if (tokens.size() != 2) throw Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected 'L <k>'");
        int k = parse_int(tokens[1], line_no);
        if (k < 0) throw Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": negative loop count");
        free_loops += k;
      } else if (head == "X+" || head == "X-" || head == "V") {
        if (tokens.size() != 5)
          throw Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected 4 semiarc ids after '" +
                                            std::string(head) + "'");
        int ids[4];
        for (int i = 0; i < 4; ++i) {
          ids[i] = parse_int(tokens[static_cast<std::size_t>(i + 1)], line_no);
          if (ids[i] < 0)
            throw Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": negative semiarc id");
          max_id = std::max(max_id, ids[i]);
        }
        if (head == "V") {
          virtuals.push_back({ids[0], ids[1], ids[2], ids[3]});
        } else {
          crossings.push_back({head == "X+" ? Sign::positive : Sign::negative, ids[0], ids[1], ids[2], ids[3]});
          lines.push_back(line_no);
        }
      } else {
        throw Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": unknown record '" + std::string(head) + "'");
      }
    }
    if (eol == text.size()) break;
  }

  int count = max_id + 1;
  if (!virtuals.empty()) {
    // Erase virtual crossings by identifying the semiarcs on either side.
    std::vector<int> parent(static_cast<std::size_t>(count));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (const auto& v : virtuals) {
      unite(v.a_in, v.a_out);
      unite(v.b_in, v.b_out);
    }
    std::vector<char> classical(static_cast<std::size_t>(count), 0);
    for (const auto& x : crossings)
      for (SemiarcId s : {x.under_in, x.over_in, x.under_out, x.over_out}) classical[find(s)] = 1;
    std::vector<int> renumber(static_cast<std::size_t>(count), -1);
    int next = 0;
    for (int s = 0; s < count; ++s) {
      if (find(s) != s) continue;
      if (classical[s])
        renumber[s] = next++;
      else
        ++free_loops;  // component made only of virtual crossings
    }
    for (auto& x : crossings)
      for (SemiarcId* s : {&x.under_in, &x.over_in, &x.under_out, &x.over_out}) *s = renumber[find(*s)];
    count = next;
  }

  std::vector<int> source, target;
  check_semiarcs(count, crossings, &lines, source, target);
  return SemiarcDiagram(count, std::move(crossings), free_loops);
}

std::string serialize_pd(const SemiarcDiagram& d) {
  std::ostringstream out;
  for (const auto& x : d.crossings()) {
    out << (x.sign == Sign::positive ? "X+ " : "X- ") << x.under_in << ' ' << x.over_in << ' ' << x.under_out << ' '
        << x.over_out << '\n';
  }
  if (d.free_loops() > 0) out << "L " << d.free_loops() << '\n';
  return out.str();
}

SemiarcDiagram from_planar_code(const std::vector<std::array<int, 4>>& code) {
  detail::PlanarBuilder builder;
  std::map<int, std::vector<int>> where;
  for (const auto& x : code) {
    int c = builder.add_crossing(1);
    for (int s = 0; s < 4; ++s) where[x[static_cast<std::size_t>(s)]].push_back(builder.slot(c, s));
    builder.require_incoming(builder.slot(c, 0));
  }
  for (const auto& [label, slots] : where) {
    if (slots.size() != 2)
      throw Error(ErrorKind::parse, "planar code: edge label " + std::to_string(label) + " appears " +
                                        std::to_string(slots.size()) + " times, expected 2");
    builder.connect(slots[0], slots[1]);
  }
  for (std::size_t c = 0; c < code.size(); ++c) {
    // Overstrand goes l -> j when j = l + 1 or when the labels wrap around.
    const int j = code[c][1], l = code[c][3];
    const bool l_to_j = j == l + 1 || l > j + 1;
    builder.prefer_incoming(builder.slot(static_cast<int>(c), l_to_j ? 3 : 1));
  }
  return builder.build().diagram;
}

SemiarcDiagram parse_planar_code(std::string_view text) {
  std::vector<int> numbers;
  std::string digits;
  auto flush = [&] {
    if (!digits.empty()) {
      numbers.push_back(std::stoi(digits));
      digits.clear();
    }
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
    } else if (ch == '-') {
      throw Error(ErrorKind::parse, "planar code: negative edge label");
    } else {
      flush();
    }
  }
  flush();
  if (numbers.size() % 4 != 0)
    throw Error(ErrorKind::parse, "planar code: " + std::to_string(numbers.size()) + " labels is not a multiple of 4");
  std::vector<std::array<int, 4>> code;
  for (std::size_t i = 0; i < numbers.size(); i += 4)
    code.push_back({numbers[i], numbers[i + 1], numbers[i + 2], numbers[i + 3]});
  return from_planar_code(code);
}

SemiarcDiagram torus_2n(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_parameter, "torus_2n needs n >= 1, got " + std::to_string(n));
  const int m = 2 * n;
  std::vector<Crossing> crossings;
  for (int i = 0; i < n; ++i)
    crossings.push_back({Sign::positive, 2 * i, 2 * i + 1, (2 * i + 3) % m, (2 * i + 2) % m});
  return SemiarcDiagram(m, std::move(crossings));
}

namespace {

struct PretzelAssembly {
  detail::PlanarBuilder builder;
  std::vector<int> maxima_terminals;
};

PretzelAssembly assemble_pretzel(const std::vector<int>& twists) {
  if (twists.empty()) throw Error(ErrorKind::invalid_parameter, "pretzel needs at least one twist band");
  PretzelAssembly a;
  auto& b = a.builder;
  struct Ports {
    int tl, tr, bl, br;
  };
  std::vector<Ports> bands;
  for (int t : twists) {
    const int count = t < 0 ? -t : t;
    if (count == 0) {
      Ports p{b.add_free_terminal(), b.add_free_terminal(), b.add_free_terminal(), b.add_free_terminal()};
      b.connect(p.tl, p.bl);
      b.connect(p.tr, p.br);
      bands.push_back(p);
      continue;
    }
    // Slots: 0 = SW, 1 = SE, 2 = NE, 3 = NW; crossing 0 at the bottom.
    std::vector<int> column;
    for (int j = 0; j < count; ++j) column.push_back(b.add_crossing(t > 0 ? 0 : 1));
    for (int j = 0; j + 1 < count; ++j) {
      b.connect(b.slot(column[j], 3), b.slot(column[j + 1], 0));
      b.connect(b.slot(column[j], 2), b.slot(column[j + 1], 1));
    }
    bands.push_back({b.slot(column.back(), 3), b.slot(column.back(), 2), b.slot(column.front(), 0),
                     b.slot(column.front(), 1)});
  }
  const std::size_t k = bands.size();
  a.maxima_terminals.push_back(bands.front().tl);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    b.connect(bands[i].tr, bands[i + 1].tl);
    b.connect(bands[i].br, bands[i + 1].bl);
    a.maxima_terminals.push_back(bands[i].tr);
  }
  b.connect(bands.front().tl, bands.back().tr);
  b.connect(bands.front().bl, bands.back().br);
  return a;
}

}  // namespace

SemiarcDiagram pretzel(const std::vector<int>& twists) { return assemble_pretzel(twists).builder.build().diagram; }

std::vector<SemiarcId> pretzel_maxima(const std::vector<int>& twists) {
  auto a = assemble_pretzel(twists);
  auto built = a.builder.build();
  std::vector<SemiarcId> out;
  for (int t : a.maxima_terminals) out.push_back(built.semiarc_of_terminal[a.builder.terminal_index(t)]);
  return out;
}

SemiarcDiagram chain(int k) {
  if (k < 3 || k % 2 == 0)
    throw Error(ErrorKind::invalid_parameter, "chain needs an odd number of rings >= 3, got " + std::to_string(k));
  // Ring r: 4r = from its lower-right crossing to its upper-right crossing,
  // then 4r+1, 4r+2, 4r+3 counterclockwise. Where ring A meets ring B on its
  // right, A passes over at the upper crossing and B over at the lower one.
  std::vector<Crossing> crossings;
  for (int r = 0; r < k; ++r) {
    const int a = 4 * r;
    const int b = 4 * ((r + 1) % k);
    crossings.push_back({Sign::positive, b + 1, a + 0, b + 2, a + 1});
    crossings.push_back({Sign::positive, a + 3, b + 2, a + 0, b + 3});
  }
  return SemiarcDiagram(4 * k, std::move(crossings));
}

SemiarcDiagram kinked_unknot(Sign sign, bool under_first) {
  if (under_first) return SemiarcDiagram(2, {{sign, 1, 0, 0, 1}});
  return SemiarcDiagram(2, {{sign, 0, 1, 1, 0}});
}

ConnectedSum connected_sum(const SemiarcDiagram& d1, SemiarcId s1, const SemiarcDiagram& d2, SemiarcId s2) {
  require_semiarc(d1, s1, "first");
  require_semiarc(d2, s2, "second");
  const int m1 = d1.semiarc_count();
  std::vector<Crossing> crossings = d1.crossings();
  replace_input(crossings[static_cast<std::size_t>(d1.target_crossing(s1))], s1, m1 + s2);
  for (std::size_t c = 0; c < d2.crossings().size(); ++c) {
    Crossing x = d2.crossings()[c];
    for (SemiarcId* s : {&x.under_in, &x.over_in, &x.under_out, &x.over_out}) *s += m1;
    if (static_cast<int>(c) == d2.target_crossing(s2)) replace_input(x, m1 + s2, s1);
    crossings.push_back(x);
  }
  ConnectedSum out{SemiarcDiagram(m1 + d2.semiarc_count(), std::move(crossings), d1.free_loops() + d2.free_loops()),
                   {}};
  for (SemiarcId s = 0; s < d2.semiarc_count(); ++s) out.relabel.push_back(m1 + s);
  return out;
}

SemiarcDiagram apply_r1(const SemiarcDiagram& d, SemiarcId s, Sign sign, bool under_first) {
  require_semiarc(d, s, "R1");
  const int loop = d.semiarc_count();
  const int rest = loop + 1;
  std::vector<Crossing> crossings = d.crossings();
  replace_input(crossings[static_cast<std::size_t>(d.target_crossing(s))], s, rest);
  if (under_first)
    crossings.push_back({sign, s, loop, loop, rest});
  else
    crossings.push_back({sign, loop, s, rest, loop});
  return SemiarcDiagram(d.semiarc_count() + 2, std::move(crossings), d.free_loops());
}

SemiarcDiagram apply_r2(const SemiarcDiagram& d, SemiarcId over, SemiarcId under, R2Variant variant,
                        Sign first_sign) {
  require_semiarc(d, over, "R2 over");
  require_semiarc(d, under, "R2 under");
  if (over == under) throw Error(ErrorKind::invalid_parameter, "R2 needs two distinct semiarcs");
  const int m = d.semiarc_count();
  const int over_mid = m, over_end = m + 1, under_mid = m + 2, under_end = m + 3;
  std::vector<Crossing> crossings = d.crossings();
  replace_input(crossings[static_cast<std::size_t>(d.target_crossing(over))], over, over_end);
  replace_input(crossings[static_cast<std::size_t>(d.target_crossing(under))], under, under_end);
  const Sign second_sign = first_sign == Sign::positive ? Sign::negative : Sign::positive;
  Crossing first{first_sign, 0, over, 0, over_mid};
  Crossing second{second_sign, 0, over_mid, 0, over_end};
  if (variant == R2Variant::parallel) {
    first.under_in = under;
    first.under_out = under_mid;
    second.under_in = under_mid;
    second.under_out = under_end;
  } else {
    second.under_in = under;
    second.under_out = under_mid;
    first.under_in = under_mid;
    first.under_out = under_end;
  }
  crossings.push_back(first);
  crossings.push_back(second);
  return SemiarcDiagram(m + 4, std::move(crossings), d.free_loops());
}

StrandDecomposition strands(const SemiarcDiagram& d) {
  const int m = d.semiarc_count();
  StrandDecomposition out;
  out.strand_of.assign(static_cast<std::size_t>(m), -1);

  // Walk each strand from the semiarc that leaves an undercrossing.
  std::vector<char> is_start(static_cast<std::size_t>(m), 0);
  for (const auto& x : d.crossings()) is_start[x.under_out] = 1;
  auto next_over = [&](SemiarcId s) -> SemiarcId {
    const auto& x = d.crossings()[static_cast<std::size_t>(d.target_crossing(s))];
    return x.over_in == s ? x.over_out : -1;
  };
  std::vector<Strand> found;
  for (SemiarcId s = 0; s < m; ++s) {
    if (!is_start[s]) continue;
    Strand strand;
    for (SemiarcId t = s; t != -1; t = next_over(t)) strand.semiarcs.push_back(t);
    found.push_back(std::move(strand));
  }
  std::vector<char> covered(static_cast<std::size_t>(m), 0);
  for (const auto& st : found)
    for (SemiarcId t : st.semiarcs) covered[t] = 1;
  for (SemiarcId s = 0; s < m; ++s) {
    if (covered[s]) continue;
    Strand strand;
    strand.closed = true;
    SemiarcId t = s;
    do {
      strand.semiarcs.push_back(t);
      covered[t] = 1;
      t = next_over(t);
    } while (t != s);
    found.push_back(std::move(strand));
  }

  std::sort(found.begin(), found.end(), [](const Strand& a, const Strand& b) {
    return *std::min_element(a.semiarcs.begin(), a.semiarcs.end()) <
           *std::min_element(b.semiarcs.begin(), b.semiarcs.end());
  });
  out.strands = std::move(found);
  for (std::size_t i = 0; i < out.strands.size(); ++i)
    for (SemiarcId t : out.strands[i].semiarcs) out.strand_of[t] = static_cast<int>(i);
  for (const auto& x : d.crossings())
    out.crossings.push_back({out.strand_of[x.over_in], out.strand_of[x.under_in], out.strand_of[x.under_out]});
  return out;
}

}  // namespace biq
