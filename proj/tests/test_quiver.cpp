#include "doctest.h"

#include <numeric>
#include <random>

#include "biquandle/quiver.hpp"

using namespace biq;

namespace {

ColoringQuiver graph(int n, const std::vector<std::pair<int, int>>& edges) {
  ColoringQuiver q;
  q.vertices.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) q.vertices[v] = {v + 1};
  for (auto [s, t] : edges) q.edges.push_back({s, t, 0});
  return q;
}

/// Tries every vertex bijection.
bool oracle_isomorphic(const ColoringQuiver& a, const ColoringQuiver& b) {
  const int n = static_cast<int>(a.vertices.size());
  if (n != static_cast<int>(b.vertices.size()) || a.edges.size() != b.edges.size()) return false;
  std::vector<std::pair<int, int>> eb;
  for (const auto& e : b.edges) eb.emplace_back(e.source, e.target);
  std::sort(eb.begin(), eb.end());
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    std::vector<std::pair<int, int>> ea;
    for (const auto& e : a.edges) ea.emplace_back(p[e.source], p[e.target]);
    std::sort(ea.begin(), ea.end());
    if (ea == eb) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

const Endomorphism doubling{{2, 4, 2, 4}};  // x -> 2x on R_4

}  // namespace

TEST_CASE("quiver of T(2,4) over R_4 under doubling") {
  const auto r4 = make_dihedral(4).biquandle();
  const auto q = build_quiver(torus_2n(4), r4, {doubling});
  CHECK(q.vertices.size() == count_colorings(torus_2n(4), r4));
  CHECK(q.edges.size() == q.vertices.size());
  for (const auto& e : q.edges) {
    for (Element x : q.vertices[e.target]) CHECK(x % 2 == 0);
    Coloring image;
    for (Element x : q.vertices[e.source]) image.push_back(doubling(x));
    CHECK(q.vertices[e.target] == image);
  }
}

TEST_CASE("identity and empty S") {
  const auto r3 = make_dihedral(3).biquandle();
  const auto d = torus_2n(3);
  const auto id = build_quiver(d, r3, {affine_map(3, 1, 0)});
  for (const auto& e : id.edges) CHECK(e.source == e.target);
  CHECK(in_degree_polynomial(id).terms() == std::map<std::uint64_t, std::uint64_t>{{1, 9}});

  const auto none = build_quiver(d, r3, {});
  CHECK(none.vertices.size() == 9);
  CHECK(none.edges.empty());
  CHECK(in_degree_polynomial(none).to_string() == "9");
}

TEST_CASE("multigraph semantics") {
  const auto r3 = make_dihedral(3).biquandle();
  const auto d = torus_2n(3);
  const auto q = build_quiver(d, r3, {affine_map(3, 1, 0), affine_map(3, 1, 0)});
  CHECK(q.edges.size() == 18);
  CHECK(in_degree_polynomial(q).coefficient(2) == 9);
  CHECK_THROWS_AS(build_quiver(d, r3, {Endomorphism{{1, 1, 2}}}), Error);
}

TEST_CASE("in-degree polynomials sum to the vertex and edge counts") {
  const auto r9 = make_dihedral(9).biquandle();
  for (const auto& d : {pretzel({9, 2, 9}), connected_sum(torus_2n(3), 0, torus_2n(3), 0).diagram}) {
    const auto q = build_quiver(d, r9, {affine_map(9, 3, 0), affine_map(9, 2, 1)});
    const auto p = in_degree_polynomial(q);
    CHECK(p.mass() == q.vertices.size());
    CHECK(p.weighted_sum() == q.edges.size());
  }
}

TEST_CASE("separation on R_4 and R_9") {
  const auto r4 = make_dihedral(4).biquandle();
  const auto a = build_quiver(torus_2n(4), r4, {doubling});
  const auto b = build_quiver(chain(3), r4, {doubling});
  CHECK(in_degree_polynomial(a).to_string() == "4u^4 + 12");
  CHECK(in_degree_polynomial(b).to_string() == "2u^8 + 14");
  CHECK_FALSE(quivers_isomorphic(a, b));
  CHECK(quivers_isomorphic(a, a));

  const auto sum = connected_sum(torus_2n(4), 0, torus_2n(4), 0).diagram;
  const auto a3 = build_quiver(sum, r4, {doubling});
  const auto b3 = build_quiver(chain(5), r4, {doubling});
  CHECK(in_degree_polynomial(a3).to_string() == "8u^8 + 56");
  CHECK(in_degree_polynomial(b3).to_string() == "2u^32 + 62");
  CHECK_FALSE(quivers_isomorphic(a3, b3));

  const auto r9 = make_dihedral(9).biquandle();
  const std::vector<Endomorphism> triple{affine_map(9, 3, 0)};
  const auto p = build_quiver(pretzel({9, 2, 9}), r9, triple);
  const auto g = build_quiver(connected_sum(torus_2n(3), 0, torus_2n(3), 0).diagram, r9, triple);
  CHECK(in_degree_polynomial(p).to_string() == "9u^9 + 72");
  CHECK(in_degree_polynomial(g).to_string() == "3u^27 + 78");
  CHECK_FALSE(quivers_isomorphic(p, g));
}

TEST_CASE("isomorphism needs more than degree sequences") {
  // one 6-cycle against two 3-cycles: every vertex has in- and out-degree 1
  const auto six = graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const auto two = graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(quivers_isomorphic(six, two));
  CHECK(quivers_isomorphic(six, graph(6, {{3, 0}, {0, 5}, {5, 1}, {1, 4}, {4, 2}, {2, 3}})));
  // parallel edges count
  CHECK_FALSE(quivers_isomorphic(graph(2, {{0, 1}, {0, 1}}), graph(2, {{0, 1}, {1, 0}})));
}

TEST_CASE("isomorphism agrees with the permutation oracle") {
  std::mt19937 rng(1729);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const int m = std::uniform_int_distribution<int>(0, 2 * n)(rng);
    std::uniform_int_distribution<int> vertex(0, n - 1);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) edges.emplace_back(vertex(rng), vertex(rng));

    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    auto relabelled = edges;
    for (auto& [s, t] : relabelled) s = p[s], t = p[t];
    auto perturbed = relabelled;
    if (!perturbed.empty()) perturbed.back().second = vertex(rng);

    const auto a = graph(n, edges), b = graph(n, relabelled), c = graph(n, perturbed);
    CHECK(quivers_isomorphic(a, b));
    CHECK(quivers_isomorphic(a, c) == oracle_isomorphic(a, c));
  }
}

TEST_CASE("size guard") {
  const auto big = graph(5, {});
  CHECK_THROWS_AS(quivers_isomorphic(big, big, 4), Error);
}
