#include "doctest.h"

#include <set>

#include "biquandle/coloring.hpp"
#include "biquandle/enhance.hpp"
#include "biquandle/knot_table.hpp"

using namespace biq;

TEST_CASE("multiset packaging") {
  const auto p = ExponentPolynomial::from_multiset({0, 1, 1, 2, 2, 2, 3, 3, 3, 3, 3});
  CHECK(p.to_string() == "5u^3 + 3u^2 + 2u + 1");
  CHECK(p.coefficient(3) == 5);
  CHECK(p.coefficient(7) == 0);
  CHECK(p.mass() == 11);
  CHECK(ExponentPolynomial().to_string() == "0");
}

TEST_CASE("column group polynomials of 6_1 and 9_24 over R_9") {
  const auto r9 = make_dihedral(9);
  for (const char* name : {"6_1", "9_24"}) {
    const auto& d = builtin_knot(name).diagram;
    const auto p = column_group_polynomial(d, r9);
    CHECK(p.to_string() == "54u^18 + 18u^6 + 9u^2");
    CHECK(p.mass() == count_colorings(d, r9.biquandle()));
  }
}

TEST_CASE("exponents depend only on the generated subquandle") {
  const auto r9 = make_dihedral(9);
  const auto& d = builtin_knot("6_1").diagram;
  const auto colorings = enumerate_full_colorings(d, r9.biquandle());
  const auto orders = column_group_multiset(d, r9);
  REQUIRE(orders.size() == colorings.size());
  std::map<std::vector<Element>, std::uint64_t> by_closure;
  for (std::size_t i = 0; i < colorings.size(); ++i) {
    const std::set<Element> labels(colorings[i].begin(), colorings[i].end());
    const auto closure = subquandle_closure(r9, {labels.begin(), labels.end()});
    const auto [it, fresh] = by_closure.emplace(closure, orders[i]);
    CHECK(it->second == orders[i]);
    // constant colorings generate a one-point subquandle with one involution
    if (labels.size() == 1) CHECK(orders[i] == 2);
  }
}

TEST_CASE("column group orders of small subquandles") {
  const auto r9 = make_dihedral(9);
  CHECK(column_group_order(r9, {1}) == 2);
  CHECK(column_group_order(r9, {1, 4}) == 6);
  CHECK(column_group_order(r9, {1, 2}) == 18);
  CHECK(column_group_order(make_dihedral(3), {1, 2}) == 6);
  CHECK_THROWS_AS(column_group_order(r9, {1, 2}, 5), Error);
}

TEST_CASE("invariance under Reidemeister moves") {
  const auto r9 = make_dihedral(9);
  const auto d = pretzel({3, -3, 3});
  const auto base = column_group_polynomial(d, r9);
  CHECK(column_group_polynomial(apply_r1(d, 2, Sign::negative), r9) == base);
  CHECK(column_group_polynomial(apply_r2(d, 0, 5, R2Variant::antiparallel), r9) == base);
}

TEST_CASE("non-quandles are rejected") {
  CHECK_THROWS_AS(Quandle{biquandle_z()}, Error);
  CHECK_THROWS_AS(Quandle{biquandle_t()}, Error);
}
