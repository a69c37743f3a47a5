#include "doctest.h"

#include <functional>

#include "biquandle/algebra.hpp"
#include "support.hpp"

using namespace biq;

namespace {

void check_axiom_violation(const std::function<void()>& f) {
  try {
    f();
    FAIL("expected an axiom violation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::axiom_violation);
  }
}

}  // namespace

TEST_CASE("dihedral R_3 tables") {
  const auto r3 = make_dihedral(3).biquandle();
  const Table expected{{1, 3, 2}, {3, 2, 1}, {2, 1, 3}};
  CHECK(r3.tables().under == expected);
  CHECK(r3.is_quandle());
  for (Element x = 1; x <= 3; ++x)
    for (Element y = 1; y <= 3; ++y) CHECK(r3.over(x, y) == x);
}

TEST_CASE("dihedral quandles satisfy the axioms for n = 1..12") {
  for (int n = 1; n <= 12; ++n) {
    const auto r = make_dihedral(n).biquandle();
    CHECK(validate_axioms(r.tables()).ok());
    for (Element x = 1; x <= n; ++x)
      for (Element y = 1; y <= n; ++y) CHECK(r.under(x, y) == ((2 * y - x) % n + n - 1) % n + 1);
  }
  CHECK(make_dihedral(1).biquandle().tables().under == Table{{1}});
}

TEST_CASE("every column of R_9 is an involution") {
  const auto q = make_dihedral(9);
  for (Element y = 1; y <= 9; ++y) {
    const auto p = column_permutation(q, y);
    CHECK(p.compose(p).is_identity());
    CHECK(p.order() == 2);
  }
  // y = 1: x -> 2 - x mod 9
  const auto c1 = column_permutation(q, 1);
  for (Element x = 1; x <= 9; ++x) CHECK(c1(x) == ((2 - x) % 9 + 9 - 1) % 9 + 1);
}

TEST_CASE("column permutation of R_3 at y = 1") {
  CHECK(column_permutation(make_dihedral(3), 1).images() == std::vector<Element>{1, 3, 2});
  const auto trivial = Quandle(make_linear_biquandle(3, 1, 0, 1, 0));
  for (Element y = 1; y <= 3; ++y) CHECK(column_permutation(trivial, y).is_identity());
}

TEST_CASE("linear biquandles") {
  const auto z = make_linear_biquandle(4, 3, 0, 1, 2);
  CHECK(z == biquandle_z());
  CHECK_FALSE(z.is_quandle());
  CHECK(z.linear_form() == LinearForm{4, 3, 0, 1, 2});
  CHECK(make_dihedral(7).biquandle().linear_form() == LinearForm{7, 1, 0, 6, 2});
  for (int n = 1; n <= 6; ++n) CHECK_NOTHROW(make_linear_biquandle(n, 1, 0, 1, 0));
  // x -> 2x mod 4 is not a bijection
  check_axiom_violation([] { make_linear_biquandle(4, 2, 0, 1, 2); });
  CHECK_FALSE(biquandle_t().linear_form().has_value());
}

TEST_CASE("printed tables of T and the example are division tables") {
  const BiquandleTables t_printed{{{1, 3, 4, 2}, {3, 1, 2, 4}, {2, 4, 3, 1}, {4, 2, 1, 3}},
                                  {{1, 4, 2, 3}, {2, 3, 1, 4}, {4, 1, 3, 2}, {3, 2, 4, 1}}};
  const BiquandleTables ex_printed{{{2, 3, 1, 4}, {3, 2, 4, 1}, {4, 1, 3, 2}, {1, 4, 2, 3}},
                                   {{3, 1, 2, 4}, {4, 2, 1, 3}, {2, 4, 3, 1}, {1, 3, 4, 2}}};
  for (const auto& [printed, b] : {std::pair{t_printed, biquandle_t()}, std::pair{ex_printed, example_biquandle_4()}}) {
    // Read literally, the printed tables are not a biquandle.
    CHECK_FALSE(validate_axioms(printed).ok());
    CHECK_THROWS_AS(FiniteBiquandle::from_tables(printed), Error);
    CHECK(validate_axioms(b.tables()).ok());
    for (Element w = 1; w <= 4; ++w)
      for (Element v = 1; v <= 4; ++v) {
        CHECK(b.over(printed.over[w - 1][v - 1], v) == w);
        CHECK(b.under(v, printed.under[w - 1][v - 1]) == w);
      }
  }
}

TEST_CASE("mutating printed T is rejected with a named column") {
  BiquandleTables printed{{{1, 3, 4, 2}, {3, 1, 2, 4}, {2, 4, 3, 1}, {4, 2, 1, 3}},
                          {{1, 4, 2, 3}, {2, 3, 1, 4}, {4, 1, 3, 2}, {3, 2, 4, 1}}};
  printed.under[0][0] = 2;
  try {
    FiniteBiquandle::from_division_tables(printed);
    FAIL("mutation accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::axiom_violation);
    CHECK(std::string(e.what()).find("under-column-bijective") != std::string::npos);
  }
}

TEST_CASE("single-entry mutations of T's operation tables are rejected with a witness") {
  const auto base = biquandle_t().tables();
  for (int which = 0; which < 2; ++which)
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        for (Element v = 1; v <= 4; ++v) {
          auto t = base;
          auto& cell = which == 0 ? t.over[x][y] : t.under[x][y];
          if (cell == v) continue;
          cell = v;
          const auto report = validate_axioms(t);
          REQUIRE_FALSE(report.ok());
          CHECK_FALSE(report.violations.front().witness.empty());
        }
}

TEST_CASE("validation reports") {
  CHECK(validate_axioms(make_dihedral(5).biquandle().tables()).ok());
  CHECK(validate_axioms(biquandle_z().tables()).ok());
  BiquandleTables bad{make_dihedral(3).biquandle().tables().over, make_dihedral(4).biquandle().tables().under};
  bad.under.pop_back();
  const auto report = validate_axioms(bad);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().axiom == Axiom::shape);
  try {
    FiniteBiquandle::from_tables(bad);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::shape);
  }
}

TEST_CASE("there are 36 biquandles on three labelled elements") {
  const auto all = test::all_biquandles_of_order_3();
  CHECK(all.size() == 36);
  int quandles = 0;
  for (const auto& b : all) quandles += b.is_quandle();
  // trivial, R_3 and the three labellings of the quandle with one fixed column
  CHECK(quandles == 5);
}

TEST_CASE("Hom(R_3, R_3) agrees with a direct search") {
  const auto r3 = make_dihedral(3).biquandle();
  std::vector<std::vector<Element>> expected;
  for (int code = 0; code < 27; ++code) {
    std::vector<Element> f{code % 3 + 1, code / 3 % 3 + 1, code / 9 + 1};
    bool ok = true;
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        const int image_of_op = f[((2 * y - x) % 3 + 3) % 3] - 1;
        const int op_of_images = ((2 * (f[y] - 1) - (f[x] - 1)) % 3 + 3) % 3;
        ok = ok && image_of_op == op_of_images;
      }
    if (ok) expected.push_back(f);
  }
  std::sort(expected.begin(), expected.end());
  CHECK(enumerate_homs(r3, r3) == expected);
  CHECK(expected.size() == 9);  // the affine maps x -> ax + b
}

TEST_CASE("homomorphisms from the one-element biquandle pick the idempotents") {
  const auto one = make_dihedral(1).biquandle();
  for (const auto& y : {biquandle_t(), biquandle_z(), example_biquandle_4(), make_dihedral(5).biquandle()}) {
    std::size_t idempotents = 0;
    for (Element x = 1; x <= y.size(); ++x) idempotents += y.over(x, x) == x && y.under(x, x) == x;
    CHECK(enumerate_homs(one, y).size() == idempotents);
    if (y.is_quandle()) CHECK(idempotents == static_cast<std::size_t>(y.size()));
  }
}

TEST_CASE("affine maps are endomorphisms of R_n") {
  for (int n : {4, 6, 9}) {
    const auto r = make_dihedral(n).biquandle();
    const auto endos = enumerate_endos(r);
    CHECK(endos.size() == static_cast<std::size_t>(n * n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        CHECK(std::find(endos.begin(), endos.end(), affine_map(n, a, b)) != endos.end());
  }
  CHECK(affine_map(4, 2, 0).images == std::vector<Element>{2, 4, 2, 4});
}

TEST_CASE("group orders") {
  CHECK(group_order({Permutation::identity(5)}) == 1);
  const auto q = make_dihedral(9);
  std::vector<Permutation> some, all;
  for (Element y : {1, 4, 7}) some.push_back(column_permutation(q, y));
  for (Element y = 1; y <= 9; ++y) all.push_back(column_permutation(q, y));
  CHECK(group_order(some) == 6);
  CHECK(group_order(all) == 18);
  CHECK_THROWS_AS(group_order(all, 10), Error);
}

TEST_CASE("subquandle closure in R_9") {
  const auto q = make_dihedral(9);
  CHECK(subquandle_closure(q, {1}) == std::vector<Element>{1});
  CHECK(subquandle_closure(q, {1, 4}) == std::vector<Element>{1, 4, 7});
  CHECK(subquandle_closure(q, {1, 2}) == std::vector<Element>{1, 2, 3, 4, 5, 6, 7, 8, 9});
}

TEST_CASE("permutations") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), Error);
  const Permutation p({2, 3, 1});
  CHECK(p.order() == 3);
  CHECK(p.compose(p.inverse()).is_identity());
}

TEST_CASE("text format round trip") {
  for (const auto& b : {biquandle_t(), biquandle_z(), make_dihedral(6).biquandle()})
    CHECK(parse_biquandle(serialize_biquandle(b)) == b);
  CHECK_THROWS_AS(parse_biquandle("2\n1 x\n"), Error);
  CHECK_THROWS_AS(Quandle{biquandle_z()}, Error);
}
