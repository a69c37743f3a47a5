#include "doctest.h"

#include <numeric>

#include "biquandle/coloring.hpp"
#include "support.hpp"

using namespace biq;

namespace {

/// Every assignment checked against the crossing relations, written out per
/// sign rather than through sides().
std::vector<Coloring> oracle_colorings(const SemiarcDiagram& d, const FiniteBiquandle& y) {
  const int m = d.semiarc_count(), n = y.size();
  std::vector<Coloring> out;
  Coloring c(static_cast<std::size_t>(m), 1);
  while (true) {
    bool ok = true;
    for (const auto& x : d.crossings()) {
      if (x.sign == Sign::positive)
        ok = ok && c[x.under_out] == y.under(c[x.under_in], c[x.over_out]) &&
             c[x.over_in] == y.over(c[x.over_out], c[x.under_in]);
      else
        ok = ok && c[x.under_in] == y.under(c[x.under_out], c[x.over_in]) &&
             c[x.over_out] == y.over(c[x.over_in], c[x.under_out]);
    }
    if (ok) out.push_back(c);
    int i = m - 1;
    while (i >= 0 && c[i] == n) c[i--] = 1;
    if (i < 0) break;
    ++c[i];
  }
  return out;
}

std::vector<FiniteBiquandle> targets() {
  auto all = test::all_biquandles_of_order_3();
  all.push_back(biquandle_t());
  all.push_back(biquandle_z());
  all.push_back(example_biquandle_4());
  all.push_back(make_dihedral(4).biquandle());
  return all;
}

std::vector<SemiarcDiagram> small_diagrams() {
  return {kinked_unknot(), torus_2n(2), torus_2n(3), torus_2n(4), pretzel({1, -2, 1}), chain(3)};
}

}  // namespace

TEST_CASE("T(2,4) over Z") {
  const auto d = torus_2n(4);
  const auto all = enumerate_colorings(d, biquandle_z());
  CHECK(all.size() == 16);
  CHECK(count_colorings(d, biquandle_z()) == 16);
  for (const auto& c : all) CHECK(is_coloring(d, biquandle_z(), c));
  for (int k = 1; k <= 4; ++k) CHECK(count_colorings(torus_2n(4 * k), biquandle_z()) == 16);
}

TEST_CASE("enumerator agrees with the oracle") {
  for (const auto& y : targets())
    for (const auto& d : small_diagrams()) {
      if (d.semiarc_count() > 8 && y.size() > 3) continue;
      CHECK(enumerate_colorings(d, y) == oracle_colorings(d, y));
    }
  for (const auto& y : {biquandle_t(), biquandle_z(), make_dihedral(3).biquandle()}) {
    const auto d = torus_2n(5);
    CHECK(enumerate_colorings(d, y) == brute_force_colorings(d, y));
  }
  CHECK_THROWS_AS(brute_force_colorings(chain(5), make_dihedral(9).biquandle()), Error);
}

TEST_CASE("one-element target and free loops") {
  const auto one = make_dihedral(1).biquandle();
  for (const auto& d : small_diagrams()) CHECK(count_colorings(d, one) == 1);
  const auto loops = parse_pd("L 3");
  CHECK(count_colorings(loops, make_dihedral(5).biquandle()) == 125);
  CHECK(enumerate_full_colorings(loops, make_dihedral(2).biquandle()).size() == 8);
  CHECK(enumerate_colorings(loops, make_dihedral(2).biquandle()).size() == 1);
}

TEST_CASE("quandle colorings include the constants") {
  for (const auto& y : targets()) {
    if (!y.is_quandle()) continue;
    for (const auto& d : small_diagrams())
      for (Element e = 1; e <= y.size(); ++e)
        CHECK(is_coloring(d, y, Coloring(static_cast<std::size_t>(d.semiarc_count()), e)));
  }
  const auto kink = enumerate_colorings(kinked_unknot(), make_dihedral(3).biquandle());
  CHECK(kink == std::vector<Coloring>{{1, 1}, {2, 2}, {3, 3}});
}

TEST_CASE("the kinked unknot over Z has 4 colorings, not all constant") {
  const auto kink = enumerate_colorings(kinked_unknot(), biquandle_z());
  CHECK(kink.size() == 4);
  int constant = 0;
  for (const auto& c : kink) constant += c[0] == c[1];
  CHECK(constant < 4);
}

TEST_CASE("dihedral counts") {
  CHECK(count_colorings(pretzel({9, 2, 9}), make_dihedral(9).biquandle()) == 81);
  CHECK(count_colorings(chain(5), make_dihedral(4).biquandle()) == 64);
  for (int p : {3, 5, 7})
    for (int n = 3; n <= 12; ++n)
      CHECK(count_colorings(torus_2n(p), make_dihedral(n).biquandle()) ==
            static_cast<std::uint64_t>(n * std::gcd(p, n)));
}

TEST_CASE("Reidemeister 1 and 2 preserve counts for every target") {
  const auto ys = targets();
  for (const auto& d : small_diagrams()) {
    std::vector<std::uint64_t> base;
    for (const auto& y : ys) base.push_back(count_colorings(d, y));
    auto same = [&](const SemiarcDiagram& moved) {
      for (std::size_t i = 0; i < ys.size(); ++i)
        if (count_colorings(moved, ys[i]) != base[i]) return false;
      return true;
    };
    for (SemiarcId s = 0; s < d.semiarc_count(); ++s)
      for (Sign sign : {Sign::positive, Sign::negative})
        for (bool under_first : {true, false}) CHECK(same(apply_r1(d, s, sign, under_first)));
    for (SemiarcId a = 0; a < d.semiarc_count(); ++a)
      for (SemiarcId b = 0; b < d.semiarc_count(); ++b) {
        if (a == b) continue;
        for (R2Variant v : {R2Variant::parallel, R2Variant::antiparallel})
          for (Sign sign : {Sign::positive, Sign::negative}) CHECK(same(apply_r2(d, a, b, v, sign)));
      }
  }
}

TEST_CASE("braid relations on closed 3-braids") {
  // σ1σ2σ1 = σ2σ1σ2, σ1⁻¹σ2σ1 = σ2σ1σ2⁻¹, σ1σ1⁻¹ = 1, each followed by
  // a common tail so the closures are nontrivial.
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> relations{
      {{1, 2, 1}, {2, 1, 2}},
      {{-1, -2, -1}, {-2, -1, -2}},
      {{-1, 2, 1}, {2, 1, -2}},
      {{1, -1}, {}},
      {{-2, 2}, {}},
  };
  const std::vector<std::vector<int>> tails{{1}, {2}, {-1, 2}, {1, 1, -2}, {2, -1, 2, -1}};
  const auto ys = targets();
  for (const auto& [lhs, rhs] : relations)
    for (const auto& tail : tails) {
      auto a = lhs, b = rhs;
      a.insert(a.end(), tail.begin(), tail.end());
      b.insert(b.end(), tail.begin(), tail.end());
      const auto da = test::braid_closure(3, a), db = test::braid_closure(3, b);
      for (const auto& y : ys) CHECK(count_colorings(da, y) == count_colorings(db, y));
    }
}

TEST_CASE("relation matrix of T(2,4) over Z") {
  const auto m = coloring_matrix(torus_2n(4), biquandle_z());
  const std::vector<std::int64_t> expected{
      0, 3, 3, 0, 0, 0, 0, 0,  //
      0, 0, 0, 3, 3, 0, 0, 0,  //
      0, 0, 0, 0, 0, 3, 3, 0,  //
      3, 0, 0, 0, 0, 0, 0, 3,  //
      1, 0, 2, 3, 0, 0, 0, 0,  //
      0, 0, 1, 0, 2, 3, 0, 0,  //
      0, 0, 0, 0, 1, 0, 2, 3,  //
      2, 3, 0, 0, 0, 0, 1, 0,
  };
  CHECK(m.rows == 8);
  CHECK(m.cols == 8);
  CHECK(m.modulus == 4);
  CHECK(m.entries == expected);
  CHECK(count_solutions_snf(m) == 16);
}

TEST_CASE("relation matrices") {
  const auto unknot = parse_pd("L 1");
  const auto m = coloring_matrix(unknot, make_dihedral(5).biquandle());
  CHECK(m.rows == 0);
  CHECK(m.cols == 0);
  CHECK(count_colorings_linear(unknot, make_dihedral(5).biquandle()) == 5);

  CHECK(count_solutions_snf(coloring_matrix(torus_2n(3), make_dihedral(3).biquandle())) == 9);
  CHECK_THROWS_AS(coloring_matrix(torus_2n(3), biquandle_t()), Error);

  // Null vectors of the matrix are exactly the colorings.
  for (const auto& y : {biquandle_z(), make_dihedral(6).biquandle()}) {
    const auto d = pretzel({3, -2, 3});
    const auto mm = coloring_matrix(d, y);
    const auto all = enumerate_colorings(d, y);
    CHECK(count_solutions_snf(mm) == all.size());
    for (const auto& c : all)
      for (int r = 0; r < mm.rows; ++r) {
        std::int64_t sum = 0;
        for (int col = 0; col < mm.cols; ++col) sum += mm.at(r, col) * (c[col] % y.size());
        CHECK(sum % y.size() == 0);
      }
  }
}
