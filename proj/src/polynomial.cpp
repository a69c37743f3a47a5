#include "biquandle/polynomial.hpp"

namespace biq {

ExponentPolynomial ExponentPolynomial::from_multiset(const std::vector<std::uint64_t>& exponents) {
  ExponentPolynomial p;
  for (auto e : exponents) p.add(e);
  return p;
}

void ExponentPolynomial::add(std::uint64_t exponent, std::uint64_t coefficient) {
  if (coefficient != 0) terms_[exponent] += coefficient;
}

std::uint64_t ExponentPolynomial::coefficient(std::uint64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t ExponentPolynomial::mass() const {
  std::uint64_t total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

std::uint64_t ExponentPolynomial::weighted_sum() const {
  std::uint64_t total = 0;
  for (const auto& [e, c] : terms_) total += e * c;
  return total;
}

std::string ExponentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "u";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace biq
