#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace biq {

/// Sparse Σ coeff·u^exp with positive coefficients; the packaging shared by
/// the in-degree and column-group enhancements.
class ExponentPolynomial {
public:
  ExponentPolynomial() = default;

  /// Each element becomes an exponent; multiplicities become coefficients.
  static ExponentPolynomial from_multiset(const std::vector<std::uint64_t>& exponents);

  void add(std::uint64_t exponent, std::uint64_t coefficient = 1);

  std::uint64_t coefficient(std::uint64_t exponent) const;
  /// Sum of coefficients (the vertex count for an in-degree polynomial).
  std::uint64_t mass() const;
  /// Σ coeff·exp (the edge count for an in-degree polynomial).
  std::uint64_t weighted_sum() const;
  const std::map<std::uint64_t, std::uint64_t>& terms() const noexcept { return terms_; }

  /// Descending exponents, e.g. "54u^18 + 18u^6 + 9u^2"; "0" when empty.
  std::string to_string() const;

  bool operator==(const ExponentPolynomial&) const = default;

private:
  std::map<std::uint64_t, std::uint64_t> terms_;
};

}  // namespace biq
