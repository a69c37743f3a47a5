#pragma once

#include <cstdint>
#include <vector>

#include "biquandle/algebra.hpp"
#include "biquandle/diagram.hpp"

namespace biq {

/// coloring[s] is the element on semiarc s.
using Coloring = std::vector<Element>;

/// True iff every crossing relation holds (free loops carry no relation).
bool is_coloring(const SemiarcDiagram& d, const FiniteBiquandle& y, const Coloring& c);

/// All colorings of the semiarcs, lexicographically sorted. Free loops are
/// not materialized; each multiplies the count by |Y|.
std::vector<Coloring> enumerate_colorings(const SemiarcDiagram& d, const FiniteBiquandle& y);

/// Col_Y(d), free loops included. Throws Error(overflow) past 2^64.
std::uint64_t count_colorings(const SemiarcDiagram& d, const FiniteBiquandle& y);

/// Colorings with one extra trailing entry per free loop, so that every
/// element of Hom(X_L, Y) appears exactly once. Sorted.
std::vector<Coloring> enumerate_full_colorings(const SemiarcDiagram& d, const FiniteBiquandle& y);

inline constexpr std::uint64_t brute_force_limit = 10'000'000;

/// Test oracle: checks every assignment. Throws Error(size_guard) when
/// |Y|^semiarcs exceeds the limit.
std::vector<Coloring> brute_force_colorings(const SemiarcDiagram& d, const FiniteBiquandle& y,
                                            std::uint64_t limit = brute_force_limit);

/// Integer matrix with a modulus; solutions are x in (Z/n)^cols, Mx = 0.
struct RelationMatrix {
  int rows = 0;
  int cols = 0;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> entries;  // row-major

  std::int64_t at(int r, int c) const { return entries[static_cast<std::size_t>(r * cols + c)]; }
  std::int64_t& at(int r, int c) { return entries[static_cast<std::size_t>(r * cols + c)]; }
};

/// Rows: one over-relation per crossing (in crossing order), then one
/// under-relation per crossing; entries reduced to [0, n). Columns: semiarcs.
/// Free loops contribute zero columns. Throws Error(invalid_parameter) if Y has
/// no linear form.
RelationMatrix coloring_matrix(const SemiarcDiagram& d, const FiniteBiquandle& y);
RelationMatrix coloring_matrix(const SemiarcDiagram& d, const LinearForm& form);

/// Diagonal of the integer Smith normal form (nonzero entries only).
std::vector<std::int64_t> smith_diagonal(const RelationMatrix& m);

/// n^(cols - r) · Π gcd(d_i, n) over the nonzero SNF diagonal of the matrix
/// reduced mod n. Overflowing
/// intermediate arithmetic raises Error(overflow) instead of wrapping.
std::uint64_t count_solutions_snf(const RelationMatrix& m);

/// count_solutions_snf(coloring_matrix(d, Y)) times |Y|^free_loops.
std::uint64_t count_colorings_linear(const SemiarcDiagram& d, const FiniteBiquandle& y);

}  // namespace biq
