#include "biquandle/enhance.hpp"

#include <algorithm>
#include <map>

#include "biquandle/coloring.hpp"

namespace biq {

std::uint64_t column_group_order(const Quandle& q, const std::vector<Element>& labels, std::size_t cap) {
  if (labels.empty()) return 1;  // the empty link
  std::vector<Permutation> columns;
  for (Element e : subquandle_closure(q, labels)) columns.push_back(column_permutation(q, e));
  return group_order(columns, cap);
}

std::vector<std::uint64_t> column_group_multiset(const SemiarcDiagram& d, const Quandle& q, std::size_t cap) {
  std::vector<std::uint64_t> orders;
  // Colorings with the same label set share a subquandle, hence an order.
  std::map<std::vector<Element>, std::uint64_t> by_labels;
  for (const auto& c : enumerate_full_colorings(d, q.biquandle())) {
    std::vector<Element> labels(c.begin(), c.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto it = by_labels.find(labels);
    if (it == by_labels.end()) it = by_labels.emplace(labels, column_group_order(q, labels, cap)).first;
    orders.push_back(it->second);
  }
  return orders;
}

ExponentPolynomial column_group_polynomial(const SemiarcDiagram& d, const Quandle& q, std::size_t cap) {
  return ExponentPolynomial::from_multiset(column_group_multiset(d, q, cap));
}

}  // namespace biq
