#pragma once

#include <cstdint>
#include <vector>

#include "biquandle/algebra.hpp"
#include "biquandle/diagram.hpp"
#include "biquandle/polynomial.hpp"

namespace biq {

/// Order of the permutation group generated by the columns of the subquandle
/// generated by `labels`.
std::uint64_t column_group_order(const Quandle& q, const std::vector<Element>& labels,
                                 std::size_t cap = default_group_cap);

/// One group order per coloring (free loops included), in coloring order.
std::vector<std::uint64_t> column_group_multiset(const SemiarcDiagram& d, const Quandle& q,
                                                 std::size_t cap = default_group_cap);

/// The multiset packaged as Σ multiplicity·u^order.
ExponentPolynomial column_group_polynomial(const SemiarcDiagram& d, const Quandle& q,
                                           std::size_t cap = default_group_cap);

}  // namespace biq
