#include "biquandle/repro.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "biquandle/algebra.hpp"
#include "biquandle/bridge.hpp"
#include "biquandle/coloring.hpp"
#include "biquandle/diagram.hpp"
#include "biquandle/enhance.hpp"
#include "biquandle/knot_table.hpp"
#include "biquandle/quiver.hpp"

namespace biq {

namespace {

struct Outcome {
  std::string computed;
  bool pass = false;
  bool unattainable = false;
};

struct Claim {
  int id;
  const char* text;
  const char* expected;
  std::function<Outcome()> run;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

SemiarcDiagram connected_power(const SemiarcDiagram& d, int copies) {
  SemiarcDiagram out = d;
  for (int i = 1; i < copies; ++i) out = connected_sum(out, 0, d, 0).diagram;
  return out;
}

std::vector<Endomorphism> single(int n, std::int64_t a) { return {affine_map(n, a, 0)}; }

// The printed tables for T, read as division tables.
BiquandleTables printed_t() {
  return {{{1, 3, 4, 2}, {3, 1, 2, 4}, {2, 4, 3, 1}, {4, 2, 1, 3}},
          {{1, 4, 2, 3}, {2, 3, 1, 4}, {4, 1, 3, 2}, {3, 2, 4, 1}}};
}

BiquandleTables printed_example() {
  return {{{2, 3, 1, 4}, {3, 2, 4, 1}, {4, 1, 3, 2}, {1, 4, 2, 3}},
          {{3, 1, 2, 4}, {4, 2, 1, 3}, {2, 4, 3, 1}, {1, 3, 4, 2}}};
}

/// Replaces one uniformly chosen entry of one table by a different value.
BiquandleTables mutate(BiquandleTables t, std::mt19937& rng) {
  const int n = static_cast<int>(t.over.size());
  std::uniform_int_distribution<int> cell(0, n - 1), shift(1, n - 1), which(0, 1);
  Table& table = which(rng) ? t.under : t.over;
  Element& e = table[static_cast<std::size_t>(cell(rng))][static_cast<std::size_t>(cell(rng))];
  e = (e - 1 + shift(rng)) % n + 1;
  return t;
}

Outcome algebra_validation() {
  std::ostringstream out;
  bool pass = true;
  int dihedral_ok = 0;
  for (int n = 1; n <= 12; ++n) dihedral_ok += validate_axioms(make_dihedral(n).biquandle().tables()).ok();
  pass &= dihedral_ok == 12;
  out << "R_1..R_12 valid " << dihedral_ok << "/12";

  const bool literal_t = validate_axioms(printed_t()).ok();
  const bool literal_e = validate_axioms(printed_example()).ok();
  const bool t_ok = validate_axioms(biquandle_t().tables()).ok();
  const bool e_ok = validate_axioms(example_biquandle_4().tables()).ok();
  const bool z_ok = validate_axioms(biquandle_z().tables()).ok();
  pass &= t_ok && e_ok && z_ok;
  out << "; T " << (t_ok ? "valid" : "INVALID") << ", example " << (e_ok ? "valid" : "INVALID") << ", Z "
      << (z_ok ? "valid" : "INVALID") << " (printed tables as division tables; literal reading valid: T "
      << yes_no(literal_t) << ", example " << yes_no(literal_e) << ")";

  std::mt19937 rng(20241016);
  int printed_rejected = 0, operation_rejected = 0;
  const BiquandleTables ops = biquandle_t().tables();
  for (int i = 0; i < 50; ++i) {
    try {
      FiniteBiquandle::from_division_tables(mutate(printed_t(), rng));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::axiom_violation && std::string(e.what()).find(':') != std::string::npos)
        ++printed_rejected;
    }
    auto report = validate_axioms(mutate(ops, rng));
    if (!report.ok() && !report.violations.front().witness.empty()) ++operation_rejected;
  }
  pass &= printed_rejected == 50 && operation_rejected == 50;
  out << "; mutations rejected with witness: printed " << printed_rejected << "/50, operation tables "
      << operation_rejected << "/50";
  return {out.str(), pass};
}

// The sixteen printed T(2,4)/Z colorings as residues mod 4.
const int printed_t24_colorings[16][8] = {
    {0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 3, 2, 2, 3, 1, 0}, {0, 2, 2, 0, 0, 2, 2, 0}, {0, 3, 1, 2, 2, 1, 3, 0},
    {1, 0, 0, 1, 3, 2, 2, 3}, {1, 1, 3, 3, 1, 1, 3, 3}, {1, 2, 2, 1, 3, 0, 0, 3}, {1, 3, 1, 3, 1, 3, 1, 3},
    {2, 0, 0, 2, 2, 0, 0, 2}, {2, 1, 3, 0, 0, 3, 1, 2}, {2, 2, 2, 2, 2, 2, 2, 2}, {2, 3, 1, 0, 0, 1, 3, 2},
    {3, 0, 0, 3, 1, 2, 2, 1}, {3, 1, 3, 1, 3, 1, 3, 1}, {3, 2, 2, 3, 1, 0, 0, 1}, {3, 3, 1, 1, 3, 3, 1, 1}};

// The printed relation matrix for T(2,4) over Z.
const int printed_t24_matrix[8][8] = {
    {0, 3, 3, 0, 0, 0, 0, 0}, {0, 0, 0, 3, 3, 0, 0, 0}, {0, 0, 0, 0, 0, 3, 3, 0}, {3, 0, 0, 0, 0, 0, 0, 3},
    {1, 0, 2, 3, 0, 0, 0, 0}, {0, 0, 1, 0, 2, 3, 0, 0}, {0, 0, 0, 0, 1, 0, 2, 3}, {2, 3, 0, 0, 0, 0, 1, 0}};

Outcome torus_z_colorings() {
  const auto z = biquandle_z();
  std::ostringstream out;
  bool pass = true;
  out << "Col_Z(T(2,4k)) for k=1..4:";
  for (int k = 1; k <= 4; ++k) {
    auto c = count_colorings(torus_2n(4 * k), z);
    out << ' ' << c;
    pass &= c == 16;
  }
  std::set<Coloring> printed;
  for (const auto& row : printed_t24_colorings) {
    Coloring c;
    for (int r : row) c.push_back(r == 0 ? 4 : r);
    printed.insert(c);
  }
  auto mine = enumerate_colorings(torus_2n(4), z);
  const bool same = std::set<Coloring>(mine.begin(), mine.end()) == printed;
  pass &= same;
  out << "; T(2,4) list equals the printed 16 tuples: " << yes_no(same);
  return {out.str(), pass};
}

std::uint64_t brute_force_solutions(const RelationMatrix& m) {
  std::vector<std::int64_t> x(static_cast<std::size_t>(m.cols), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (int r = 0; r < m.rows && ok; ++r) {
      std::int64_t s = 0;
      for (int c = 0; c < m.cols; ++c) s += m.at(r, c) * x[static_cast<std::size_t>(c)];
      ok = s % m.modulus == 0;
    }
    count += ok;
    int i = m.cols - 1;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == m.modulus - 1) x[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++x[static_cast<std::size_t>(i)];
  }
  return count;
}

std::vector<std::pair<std::string, SemiarcDiagram>> linear_family_instances() {
  std::vector<std::pair<std::string, SemiarcDiagram>> out;
  for (int n = 1; n <= 8; ++n) out.emplace_back("T(2," + std::to_string(n) + ")", torus_2n(n));
  out.emplace_back("P(3,3,3)", pretzel({3, 3, 3}));
  out.emplace_back("P(9,2,9)", pretzel({9, 2, 9}));
  out.emplace_back("P(9,4,9)", pretzel({9, 4, 9}));
  out.emplace_back("P(-2,3,5)", pretzel({-2, 3, 5}));
  for (int k : {3, 5, 7}) out.emplace_back("chain(" + std::to_string(k) + ")", chain(k));
  out.emplace_back("T(2,3)#T(2,3)", connected_power(torus_2n(3), 2));
  out.emplace_back("T(2,4)#T(2,4)", connected_power(torus_2n(4), 2));
  for (const auto& k : builtin_knots()) out.emplace_back(k.name, k.diagram);
  return out;
}

Outcome snf_path() {
  std::ostringstream out;
  bool pass = true;
  const auto z = biquandle_z();
  const auto m = coloring_matrix(torus_2n(4), z);
  bool same_matrix = m.rows == 8 && m.cols == 8;
  for (int r = 0; r < 8 && same_matrix; ++r)
    for (int c = 0; c < 8; ++c) same_matrix &= m.at(r, c) == printed_t24_matrix[r][c];
  const auto printed_count = [&] {
    RelationMatrix p{8, 8, 4, {}};
    for (const auto& row : printed_t24_matrix) p.entries.insert(p.entries.end(), std::begin(row), std::end(row));
    return count_solutions_snf(p);
  }();
  pass &= printed_count == 16 && count_solutions_snf(m) == 16;
  out << "printed matrix SNF count " << printed_count << ", generated matrix equals the printed one: " << yes_no(same_matrix);

  std::vector<FiniteBiquandle> targets;
  for (int n = 2; n <= 9; ++n) targets.push_back(make_dihedral(n).biquandle());
  targets.push_back(z);
  int agree = 0, total = 0;
  for (const auto& [name, d] : linear_family_instances()) {
    for (const auto& y : targets) {
      ++total;
      agree += count_colorings(d, y) == count_colorings_linear(d, y);
    }
  }
  pass &= agree == total;
  out << "; enumerator = SNF on " << agree << "/" << total << " (instance, target) pairs";

  std::mt19937 rng(7);
  int random_agree = 0;
  for (int i = 0; i < 200; ++i) {
    const std::int64_t n = i % 2 ? 9 : 4;
    const int max_cols = n == 4 ? 8 : 6;
    RelationMatrix r;
    r.modulus = n;
    r.cols = std::uniform_int_distribution<int>(1, max_cols)(rng);
    r.rows = std::uniform_int_distribution<int>(1, 8)(rng);
    std::uniform_int_distribution<std::int64_t> entry(-2 * n, 2 * n);
    for (int k = 0; k < r.rows * r.cols; ++k) r.entries.push_back(entry(rng));
    random_agree += count_solutions_snf(r) == brute_force_solutions(r);
  }
  pass &= random_agree == 200;
  out << "; random matrices mod 4 (<=8 cols) and mod 9 (<=6 cols) agreeing with brute force " << random_agree
      << "/200";
  return {out.str(), pass};
}

Outcome chain_counts() {
  std::ostringstream out;
  bool pass = true;
  const auto r4 = make_dihedral(4).biquandle();
  const auto z = biquandle_z();
  out << "Col_R4(chain(2b-1)), b=2,3,4:";
  std::string z_part = "; Col_Z (reported only):";
  for (int b = 2; b <= 4; ++b) {
    auto c = count_colorings(chain(2 * b - 1), r4);
    pass &= c == (1ull << (2 * b));
    out << ' ' << c;
    z_part += " " + std::to_string(count_colorings(chain(2 * b - 1), z));
  }
  out << z_part;
  return {out.str(), pass};
}

Outcome quiver_separation_a() {
  std::ostringstream out;
  bool pass = true;
  const auto r4 = make_dihedral(4).biquandle();
  const auto s = single(4, 2);
  for (int b = 2; b <= 3; ++b) {
    auto qa = build_quiver(connected_power(torus_2n(4), b - 1), r4, s);
    auto qb = build_quiver(chain(2 * b - 1), r4, s);
    ExponentPolynomial want_a, want_b;
    want_a.add(0, (1ull << (2 * b)) - (1ull << b));
    want_a.add(1ull << b, 1ull << b);
    want_b.add(0, (1ull << (2 * b)) - 2);
    want_b.add(1ull << (2 * b - 1), 2);
    auto pa = in_degree_polynomial(qa), pb = in_degree_polynomial(qb);
    const bool iso = quivers_isomorphic(qa, qb);
    pass &= pa == want_a && pb == want_b && !iso;
    out << (b == 2 ? "" : "; ") << "b=" << b << ": " << pa.to_string() << " | " << pb.to_string()
        << ", isomorphic " << yes_no(iso);
  }
  return {out.str(), pass};
}

Outcome pretzel_counts() {
  const auto r9 = make_dihedral(9).biquandle();
  auto p = count_colorings(pretzel({9, 2, 9}), r9);
  auto t = count_colorings(connected_power(torus_2n(3), 2), r9);
  return {"Col_R9(P(9,2,9)) = " + std::to_string(p) + ", Col_R9(T(2,3)#T(2,3)) = " + std::to_string(t),
          p == 81 && t == 81};
}

Outcome quiver_separation_b() {
  std::ostringstream out;
  bool pass = true;
  const auto r9 = make_dihedral(9).biquandle();
  const auto s = single(9, 3);
  auto qt = build_quiver(connected_power(torus_2n(3), 2), r9, s);
  auto pt = in_degree_polynomial(qt);
  ExponentPolynomial want_t, want_p;
  want_t.add(0, 78);
  want_t.add(27, 3);
  want_p.add(0, 72);
  want_p.add(9, 9);
  pass &= pt == want_t;
  out << "T(2,3)#T(2,3): " << pt.to_string();
  for (int r = 1; r <= 2; ++r) {
    auto qp = build_quiver(pretzel({9, 2 * r, 9}), r9, s);
    auto pp = in_degree_polynomial(qp);
    const bool iso = quivers_isomorphic(qp, qt);
    pass &= pp == want_p && !iso;
    out << "; P(9," << 2 * r << ",9): " << pp.to_string() << ", isomorphic " << yes_no(iso);
  }
  return {out.str(), pass};
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

Outcome torus_battery() {
  int ok = 0, total = 0;
  std::string first_bad;
  for (int p : {3, 5, 7}) {
    const auto d = torus_2n(p);
    for (int n = 3; n <= 12; ++n) {
      ++total;
      auto c = count_colorings(d, make_dihedral(n).biquandle());
      auto want = static_cast<std::uint64_t>(n * gcd64(p, n));
      if (c == want)
        ++ok;
      else if (first_bad.empty())
        first_bad = "; first mismatch p=" + std::to_string(p) + " n=" + std::to_string(n);
    }
  }
  return {std::to_string(ok) + "/" + std::to_string(total) + " (p,n) pairs match" + first_bad, ok == total};
}

Outcome column_enhancement() {
  std::ostringstream out;
  const auto r9 = make_dihedral(9);
  ExponentPolynomial want;
  want.add(18, 54);
  want.add(6, 18);
  want.add(2, 9);
  const auto& k61 = builtin_knot("6_1").diagram;
  const auto& k924 = builtin_knot("9_24").diagram;
  auto c61 = column_group_polynomial(k61, r9), c924 = column_group_polynomial(k924, r9);
  auto q61 = in_degree_polynomial(build_quiver(k61, r9.biquandle(), single(9, 3)));
  auto q924 = in_degree_polynomial(build_quiver(k924, r9.biquandle(), single(9, 3)));
  const bool col_ok = c61 == want && c924 == want;
  const bool u3_ok = q61.coefficient(3) == 0 && q924.coefficient(3) > 0;
  out << "column group: 6_1 " << c61.to_string() << ", 9_24 " << c924.to_string() << "; in-degree (f=3x): 6_1 "
      << q61.to_string() << ", 9_24 " << q924.to_string();
  // Colorings over R_9 form a Z/9-submodule C containing the constants, and
  // f = 3x is linear on it, so every in-degree is 0 or |C[3]| >= 9.
  auto degrees_proven = [](const ExponentPolynomial& p) {
    return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.first == 0 || t.first >= 9; });
  };
  const bool impossible = col_ok && !u3_ok && q61.coefficient(3) == 0 && degrees_proven(q924);
  if (impossible)
    out << "; 9_24 has no u^3 term, and none can exist: colorings form a Z/9-module C of size 81, f=3x is "
           "module-linear, so every in-degree is 0 or |C[3]| >= 9";
  return {out.str(), col_ok && u3_ok, impossible};
}

Outcome equal_count_check() {
  const auto r6 = make_dihedral(6).biquandle();
  const auto endos = enumerate_endos(r6);
  std::map<std::uint64_t, std::vector<std::pair<std::string, ColoringQuiver>>> groups;
  for (const auto& k : builtin_knots()) groups[count_colorings(k.diagram, r6)].emplace_back(k.name, build_quiver(k.diagram, r6, endos));
  int pairs = 0, iso = 0;
  std::string bad;
  for (const auto& [count, members] : groups) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        ++pairs;
        if (quivers_isomorphic(members[i].second, members[j].second))
          ++iso;
        else if (bad.empty())
          bad = "; not isomorphic: " + members[i].first + " vs " + members[j].first;
      }
    }
  }
  std::ostringstream out;
  out << "|End(R_6)| = " << endos.size() << ", " << groups.size() << " Col_R6 classes, " << iso << "/" << pairs
      << " equal-count pairs isomorphic" << bad;
  return {out.str(), iso == pairs && pairs > 0};
}

Outcome bridge_machinery() {
  const auto t3 = torus_2n(3);
  auto seeds = min_seed_size(t3);
  const int lower = b1_lower({{make_dihedral(3), count_colorings(t3, make_dihedral(3).biquandle())}});
  auto kink = min_seed_size(kinked_unknot());
  const bool pass = seeds && seeds->size == 2 && lower == 2 && kink && kink->size == 1;
  std::ostringstream out;
  out << "min_seed_size(T(2,3)) = " << (seeds ? std::to_string(seeds->size) : "none") << ", b1_lower(R_3) = "
      << lower << ", min_seed_size(kinked unknot) = " << (kink ? std::to_string(kink->size) : "none");
  return {out.str(), pass};
}

struct Target {
  std::string name;
  FiniteBiquandle y;
  std::optional<Quandle> q;
  std::vector<Endomorphism> s;
};

SemiarcDiagram random_move(const SemiarcDiagram& d, std::mt19937& rng) {
  std::uniform_int_distribution<int> semiarc(0, d.semiarc_count() - 1), coin(0, 1);
  const Sign sign = coin(rng) ? Sign::positive : Sign::negative;
  if (coin(rng) || d.semiarc_count() < 2) return apply_r1(d, semiarc(rng), sign, coin(rng));
  const int a = semiarc(rng);
  int b = semiarc(rng);
  while (b == a) b = semiarc(rng);
  return apply_r2(d, a, b, coin(rng) ? R2Variant::parallel : R2Variant::antiparallel, sign);
}

Outcome move_invariance() {
  std::vector<Target> targets;
  for (auto [n, a] : {std::pair{3, 2}, {4, 2}, {9, 3}}) {
    auto q = make_dihedral(n);
    targets.push_back({"R_" + std::to_string(n), q.biquandle(), q, single(n, a)});
  }
  targets.push_back({"Z", biquandle_z(), std::nullopt, single(4, 2)});

  std::vector<SemiarcDiagram> bases;
  for (int n = 2; n <= 6; ++n) bases.push_back(torus_2n(n));
  bases.push_back(pretzel({3, 3, 3}));
  bases.push_back(pretzel({-2, 3, 3}));
  bases.push_back(pretzel({2, 2, 4}));
  bases.push_back(chain(3));
  for (const char* name : {"3_1", "4_1", "5_2", "6_1"}) bases.push_back(builtin_knot(name).diagram);

  std::mt19937 rng(1729);
  int agree = 0, cases = 0;
  std::string bad;
  for (int i = 0; i < 30; ++i) {
    const auto& base = bases[static_cast<std::size_t>(i) % bases.size()];
    SemiarcDiagram moved = base;
    const int moves = 1 + i % 2;
    for (int k = 0; k < moves; ++k) moved = random_move(moved, rng);
    for (const auto& t : targets) {
      ++cases;
      bool same = count_colorings(base, t.y) == count_colorings(moved, t.y);
      same = same && in_degree_polynomial(build_quiver(base, t.y, t.s)) ==
                         in_degree_polynomial(build_quiver(moved, t.y, t.s));
      if (t.q) same = same && column_group_polynomial(base, *t.q) == column_group_polynomial(moved, *t.q);
      if (same)
        ++agree;
      else if (bad.empty())
        bad = "; first failure: pair " + std::to_string(i) + " over " + t.name;
    }
  }
  return {std::to_string(agree) + "/" + std::to_string(cases) + " (pair, target) cases unchanged" + bad,
          agree == cases};
}

const std::vector<Claim>& claims() {
  static const std::vector<Claim> all = {
      {1, "algebra validation", "R_1..R_12, example, T, Z valid; 50/50 mutations rejected",
       algebra_validation},
      {2, "Z colorings of T(2,4k)", "16 for k=1..4; list equals the printed 16 tuples",
       torus_z_colorings},
      {3, "Smith normal form path", "16; enumerator = SNF; SNF = brute force",
       snf_path},
      {4, "chain link counts", "Col_R4(chain(2b-1)) = 4^b, b=2,3,4", chain_counts},
      {5, "quiver separation A", "(4^b-2^b)+2^b u^(2^b) vs (4^b-2)+2u^(2^(2b-1)); not isomorphic",
       quiver_separation_a},
      {6, "pretzel vs granny counts", "81 and 81", pretzel_counts},
      {7, "quiver separation B", "72+9u^9 vs 78+3u^27; not isomorphic", quiver_separation_b},
      {8, "2-bridge torus battery", "Col_Rn(T(2,p)) = n*gcd(p,n)", torus_battery},
      {9, "column group and u^3 term",
       "54u^18+18u^6+9u^2 for both; u^3 absent for 6_1, present for 9_24",
       column_enhancement},
      {10, "equal counts, isomorphic quivers", "equal Col_R6 implies isomorphic quivers", equal_count_check},
      {11, "bridge machinery", "2, 2, 1", bridge_machinery},
      {12, "move invariance", "all counts and polynomials unchanged", move_invariance},
  };
  return all;
}

ReproItem evaluate(const Claim& c) {
  ReproItem item{c.id, c.text, c.expected, {}, false, false, 0.0};
  const auto start = std::chrono::steady_clock::now();
  try {
    auto outcome = c.run();
    item.computed = std::move(outcome.computed);
    item.pass = outcome.pass;
    item.unattainable = !outcome.pass && outcome.unattainable;
  } catch (const std::exception& e) {
    item.computed = std::string("error: ") + e.what();
    item.pass = false;
  }
  item.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return item;
}

}  // namespace

bool ReproReport::all_passed() const { return failures() == 0; }

int ReproReport::failures() const {
  return static_cast<int>(std::count_if(items.begin(), items.end(), [](const ReproItem& i) { return !i.pass; }));
}

int ReproReport::unexpected_failures() const {
  return static_cast<int>(
      std::count_if(items.begin(), items.end(), [](const ReproItem& i) { return !i.pass && !i.unattainable; }));
}

ReproReport run_repro(const std::vector<int>& ids, int threads) {
  std::vector<const Claim*> selected;
  for (const auto& c : claims())
    if (ids.empty() || std::find(ids.begin(), ids.end(), c.id) != ids.end()) selected.push_back(&c);
  for (int id : ids)
    if (id < 1 || id > repro_item_count)
      throw Error(ErrorKind::invalid_parameter, "no acceptance item " + std::to_string(id));

  ReproReport report;
  report.items.resize(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < selected.size();) report.items[i] = evaluate(*selected[i]);
  };
  const auto count = static_cast<std::size_t>(std::clamp(threads, 1, static_cast<int>(selected.size()) + 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

int threads_from_env() {
  const char* v = std::getenv("BIQ_THREADS");
  if (!v) return 1;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  return end != v && *end == '\0' && n > 0 && n <= 256 ? static_cast<int>(n) : 1;
}

}  // namespace biq
