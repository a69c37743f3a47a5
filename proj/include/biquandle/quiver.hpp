#pragma once

#include <cstddef>
#include <vector>

#include "biquandle/algebra.hpp"
#include "biquandle/coloring.hpp"
#include "biquandle/diagram.hpp"
#include "biquandle/polynomial.hpp"

namespace biq {

struct QuiverEdge {
  int source = 0;
  int target = 0;
  int endo = 0;  // index into ColoringQuiver::endos
};

/// Multidigraph on Hom(X_D, Y): one edge v -> φ∘v per (v, φ ∈ S), so every
/// out-degree is |S| even when two endomorphisms agree on v.
struct ColoringQuiver {
  std::vector<Coloring> vertices;  // sorted; free-loop labels trail the semiarcs
  std::vector<QuiverEdge> edges;
  std::vector<Endomorphism> endos;

  std::vector<int> in_degrees() const;
};

/// Throws Error(invalid_parameter) if some map in S is not an endomorphism.
ColoringQuiver build_quiver(const SemiarcDiagram& d, const FiniteBiquandle& y, const std::vector<Endomorphism>& s);

/// Σ_v u^{in-degree(v)}
ExponentPolynomial in_degree_polynomial(const ColoringQuiver& q);

inline constexpr std::size_t quiver_iso_limit = 2000;

/// Directed-multigraph isomorphism ignoring edge labels: colour refinement on
/// the disjoint union, then individualization with backtracking. Throws
/// Error(size_guard) above `limit` vertices.
bool quivers_isomorphic(const ColoringQuiver& a, const ColoringQuiver& b, std::size_t limit = quiver_iso_limit);

}  // namespace biq
