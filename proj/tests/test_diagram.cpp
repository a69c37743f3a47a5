#include "doctest.h"

#include "biquandle/coloring.hpp"
#include "biquandle/diagram.hpp"
#include "support.hpp"

using namespace biq;

namespace {

std::string diagram_error(std::string_view text) {
  try {
    parse_pd(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_diagram);
    return e.what();
  }
  FAIL("diagram accepted");
  return {};
}

std::uint64_t r3_count(const SemiarcDiagram& d) { return count_colorings(d, make_dihedral(3).biquandle()); }

}  // namespace

TEST_CASE("wire format") {
  const auto kink = parse_pd("X+ 0 1 1 0");
  CHECK(kink.semiarc_count() == 2);
  CHECK(kink.crossing_count() == 1);
  CHECK(kink.component_count() == 1);
  CHECK(kink == kinked_unknot(Sign::positive, false));

  const auto unknot = parse_pd("L 1");
  CHECK(unknot.semiarc_count() == 0);
  CHECK(unknot.free_loops() == 1);
  CHECK(unknot.component_count() == 1);

  CHECK(parse_pd("# trefoil\nX+ 0 1 3 2; X+ 2 3 5 4\nX+ 4 5 1 0\n") == torus_2n(3));
  // Virtual crossings are erased: two semiarcs meeting at V fuse.
  CHECK(parse_pd("X+ 0 1 2 3\nV 2 3 1 0").crossing_count() == 1);
}

TEST_CASE("malformed diagrams name the offending semiarc") {
  CHECK(diagram_error("X+ 0 1 2 0") == "line 1: semiarc 1 has no source (never leaves a crossing)");
  CHECK(diagram_error("X+ 0 1 1 0\nX- 0 2 2 3").find("semiarc 0 enters two crossings") != std::string::npos);
  CHECK(diagram_error("X+ 0 1 1 7") == "line 1: semiarc 0 has no source (never leaves a crossing)");
  CHECK_THROWS_AS(SemiarcDiagram(2, {{Sign::positive, 0, 1, 1, 5}}), Error);
  CHECK_THROWS_AS(parse_pd("X* 0 1 1 0"), Error);
  CHECK_THROWS_AS(parse_pd("X+ 0 1 one 0"), Error);
}

TEST_CASE("serialize round trip") {
  for (const auto& d : {torus_2n(5), pretzel({3, -2, 3}), chain(5), kinked_unknot(Sign::negative), parse_pd("L 2")})
    CHECK(parse_pd(serialize_pd(d)) == d);
}

TEST_CASE("planar diagram codes") {
  const auto trefoil = parse_planar_code("PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]");
  CHECK(trefoil.crossing_count() == 3);
  CHECK(trefoil.component_count() == 1);
  CHECK(r3_count(trefoil) == 9);
  CHECK(parse_planar_code("[(1,5,2,4),(3,1,4,6),(5,3,6,2)]") == trefoil);
  // Hopf link
  const auto hopf = parse_planar_code("[(4,1,3,2),(2,3,1,4)]");
  CHECK(hopf.component_count() == 2);
  CHECK(count_colorings(hopf, make_dihedral(4).biquandle()) == 8);
}

TEST_CASE("2-braid closures") {
  CHECK(torus_2n(1).crossing_count() == 1);
  CHECK(torus_2n(1).component_count() == 1);
  CHECK(r3_count(torus_2n(1)) == 3);
  CHECK(r3_count(torus_2n(3)) == 9);
  CHECK(torus_2n(4).component_count() == 2);
  CHECK(count_colorings(torus_2n(4), biquandle_z()) == 16);
  for (int n = 1; n <= 6; ++n) {
    const auto braid = test::braid_closure(2, std::vector<int>(static_cast<std::size_t>(n), 1));
    CHECK(braid.crossing_count() == n);
    for (const auto& y : {biquandle_z(), biquandle_t(), example_biquandle_4(), make_dihedral(6).biquandle()})
      CHECK(count_colorings(torus_2n(n), y) == count_colorings(braid, y));
  }
}

TEST_CASE("pretzels") {
  const auto p929 = pretzel({9, 2, 9});
  CHECK(p929.crossing_count() == 20);
  CHECK(p929.component_count() == 1);  // exactly one even twist region
  CHECK(count_colorings(p929, make_dihedral(9).biquandle()) == 81);

  const auto p1 = pretzel({1});
  CHECK(p1.crossing_count() == 1);
  CHECK(p1.component_count() == 1);
  CHECK(r3_count(p1) == 3);

  const auto p333 = pretzel({3, 3, 3});
  CHECK(p333.component_count() == 1);
  CHECK(r3_count(p333) == 27);  // det 27

  // P(-1,-1,-1) is a 2-braid closure up to mirror: the trefoil
  CHECK(r3_count(pretzel({-1, -1, -1})) == 9);
  CHECK(pretzel_maxima({3, 3, 3}).size() == 3);
}

TEST_CASE("chains") {
  CHECK(chain(3).component_count() == 3);
  CHECK(chain(3).crossing_count() == 6);
  CHECK(count_colorings(chain(3), make_dihedral(4).biquandle()) == 16);
  CHECK(count_colorings(chain(5), make_dihedral(4).biquandle()) == 64);
  CHECK_THROWS_AS(chain(4), Error);
}

TEST_CASE("connected sums") {
  const auto granny = connected_sum(torus_2n(3), 0, torus_2n(3), 0);
  CHECK(granny.diagram.crossing_count() == 6);
  CHECK(granny.diagram.component_count() == 1);
  CHECK(r3_count(granny.diagram) == 27);
  CHECK(count_colorings(granny.diagram, make_dihedral(9).biquandle()) == 81);  // 27 * 27 / 9
  CHECK(granny.relabel.size() == 6);

  const auto with_unknot = connected_sum(torus_2n(5), 3, kinked_unknot(), 1).diagram;
  for (const auto& y : {make_dihedral(5).biquandle(), biquandle_z(), biquandle_t()})
    CHECK(count_colorings(with_unknot, y) == count_colorings(torus_2n(5), y));
}

TEST_CASE("Reidemeister moves change the crossing count") {
  const auto d = torus_2n(4);
  CHECK(apply_r1(d, 2, Sign::negative).crossing_count() == 5);
  CHECK(apply_r1(d, 2, Sign::negative).semiarc_count() == 10);
  CHECK(apply_r2(d, 1, 4, R2Variant::antiparallel).crossing_count() == 6);
  CHECK(count_colorings(apply_r2(d, 1, 4, R2Variant::parallel), biquandle_z()) == 16);
  CHECK(r3_count(apply_r1(kinked_unknot(), 1, Sign::positive)) == 3);
  CHECK_THROWS_AS(apply_r1(parse_pd("L 1"), 0, Sign::positive), Error);
  CHECK_THROWS_AS(apply_r1(d, 8, Sign::positive), Error);
}

TEST_CASE("strands") {
  CHECK(strands(torus_2n(3)).strands.size() == 3);
  CHECK(strands(kinked_unknot()).strands.size() == 1);
  const auto p = pretzel({9, 2, 9});
  CHECK(static_cast<int>(strands(p).strands.size()) == p.crossing_count());

  const auto trefoil = torus_2n(3);
  const auto sd = strands(trefoil);
  for (std::size_t i = 0; i < sd.strands.size(); ++i)
    for (SemiarcId s : sd.strands[i].semiarcs) CHECK(sd.strand_of[s] == static_cast<int>(i));
  for (int c = 0; c < 3; ++c) {
    const auto& x = trefoil.crossings()[c];
    CHECK(sd.crossings[c].over == sd.strand_of[x.over_in]);
    CHECK(sd.strand_of[x.over_in] == sd.strand_of[x.over_out]);
  }
  // A component that never passes under is a single closed strand.
  const auto over_loop = strands(parse_pd("X+ 0 2 1 3\nX- 1 3 0 2"));
  REQUIRE(over_loop.strands.size() == 3);
  CHECK(over_loop.strands[2].closed);
  CHECK(over_loop.strands[2].semiarcs == std::vector<SemiarcId>{2, 3});
}
