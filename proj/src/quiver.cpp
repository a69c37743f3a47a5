#include "biquandle/quiver.hpp"

#include <algorithm>
#include <map>

namespace biq {

std::vector<int> ColoringQuiver::in_degrees() const {
  std::vector<int> deg(vertices.size(), 0);
  for (const auto& e : edges) ++deg[static_cast<std::size_t>(e.target)];
  return deg;
}

ColoringQuiver build_quiver(const SemiarcDiagram& d, const FiniteBiquandle& y, const std::vector<Endomorphism>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!is_homomorphism(y, y, s[i].images))
      throw Error(ErrorKind::invalid_parameter, "map #" + std::to_string(i + 1) + " is not an endomorphism of the target");
  }
  ColoringQuiver q;
  q.vertices = enumerate_full_colorings(d, y);
  q.endos = s;
  q.edges.reserve(q.vertices.size() * s.size());
  Coloring image;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    for (std::size_t k = 0; k < s.size(); ++k) {
      image.clear();
      for (Element e : q.vertices[v]) image.push_back(s[k](e));
      auto it = std::lower_bound(q.vertices.begin(), q.vertices.end(), image);
      if (it == q.vertices.end() || *it != image)
        throw Error(ErrorKind::internal, "endomorphism image of a coloring is not a coloring");
      q.edges.push_back({static_cast<int>(v), static_cast<int>(it - q.vertices.begin()), static_cast<int>(k)});
    }
  }
  return q;
}

ExponentPolynomial in_degree_polynomial(const ColoringQuiver& q) {
  ExponentPolynomial p;
  for (int deg : q.in_degrees()) p.add(static_cast<std::uint64_t>(deg));
  return p;
}

namespace {

/// Disjoint union of the two quivers; vertices [0, split) come from the first.
class IsoSearch {
public:
  IsoSearch(const ColoringQuiver& a, const ColoringQuiver& b)
      : split_(static_cast<int>(a.vertices.size())),
        total_(split_ + static_cast<int>(b.vertices.size())),
        out_(static_cast<std::size_t>(total_)),
        in_(static_cast<std::size_t>(total_)) {
    for (const auto& e : a.edges) add_edge(e.source, e.target);
    for (const auto& e : b.edges) add_edge(split_ + e.source, split_ + e.target);
    for (const auto& e : a.edges) first_edges_.emplace_back(e.source, e.target);
    for (const auto& e : b.edges) second_edges_.emplace_back(e.source, e.target);
    std::sort(second_edges_.begin(), second_edges_.end());
  }

  bool run() {
    std::vector<int> colour(static_cast<std::size_t>(total_), 0);
    return search(colour);
  }

private:
  void add_edge(int s, int t) {
    out_[static_cast<std::size_t>(s)].push_back(t);
    in_[static_cast<std::size_t>(t)].push_back(s);
  }

  /// Colour refinement to a stable partition; false if the two sides become
  /// unbalanced in some class.
  bool refine(std::vector<int>& colour) const {
    int classes = -1;
    while (true) {
      std::map<std::vector<int>, int> ids;
      std::vector<std::vector<int>> sigs(static_cast<std::size_t>(total_));
      for (int v = 0; v < total_; ++v) {
        auto& sig = sigs[static_cast<std::size_t>(v)];
        sig.push_back(colour[static_cast<std::size_t>(v)]);
        std::vector<int> outs, ins;
        for (int w : out_[static_cast<std::size_t>(v)]) outs.push_back(colour[static_cast<std::size_t>(w)]);
        for (int w : in_[static_cast<std::size_t>(v)]) ins.push_back(colour[static_cast<std::size_t>(w)]);
        std::sort(outs.begin(), outs.end());
        std::sort(ins.begin(), ins.end());
        sig.push_back(static_cast<int>(outs.size()));
        sig.insert(sig.end(), outs.begin(), outs.end());
        sig.push_back(-1);
        sig.insert(sig.end(), ins.begin(), ins.end());
        ids.emplace(sig, 0);
      }
      int next = 0;
      for (auto& [sig, id] : ids) id = next++;
      for (int v = 0; v < total_; ++v) colour[static_cast<std::size_t>(v)] = ids[sigs[static_cast<std::size_t>(v)]];
      if (next == classes) break;
      classes = next;
    }
    std::vector<int> balance(static_cast<std::size_t>(classes), 0);
    for (int v = 0; v < total_; ++v) balance[static_cast<std::size_t>(colour[static_cast<std::size_t>(v)])] += v < split_ ? 1 : -1;
    return std::all_of(balance.begin(), balance.end(), [](int x) { return x == 0; });
  }

  bool verify(const std::vector<int>& colour) const {
    std::map<int, int> second_of;
    for (int v = split_; v < total_; ++v) second_of[colour[static_cast<std::size_t>(v)]] = v - split_;
    std::vector<int> f(static_cast<std::size_t>(split_));
    for (int v = 0; v < split_; ++v) f[static_cast<std::size_t>(v)] = second_of.at(colour[static_cast<std::size_t>(v)]);
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(first_edges_.size());
    for (auto [s, t] : first_edges_) mapped.emplace_back(f[static_cast<std::size_t>(s)], f[static_cast<std::size_t>(t)]);
    std::sort(mapped.begin(), mapped.end());
    return mapped == second_edges_;
  }

  bool search(std::vector<int> colour) {
    if (!refine(colour)) return false;
    std::map<int, std::pair<std::vector<int>, std::vector<int>>> cells;
    for (int v = 0; v < total_; ++v) {
      auto& cell = cells[colour[static_cast<std::size_t>(v)]];
      (v < split_ ? cell.first : cell.second).push_back(v);
    }
    const std::pair<std::vector<int>, std::vector<int>>* target = nullptr;
    for (const auto& [c, cell] : cells)
      if (cell.first.size() > 1 && (!target || cell.first.size() < target->first.size())) target = &cell;
    if (!target) return verify(colour);

    const int fresh = static_cast<int>(cells.size());
    const int v = target->first.front();
    for (int w : target->second) {
      std::vector<int> next = colour;
      next[static_cast<std::size_t>(v)] = fresh;
      next[static_cast<std::size_t>(w)] = fresh;
      if (search(std::move(next))) return true;
    }
    return false;
  }

  int split_;
  int total_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<std::pair<int, int>> first_edges_;
  std::vector<std::pair<int, int>> second_edges_;
};

}  // namespace

bool quivers_isomorphic(const ColoringQuiver& a, const ColoringQuiver& b, std::size_t limit) {
  if (a.vertices.size() > limit || b.vertices.size() > limit)
    throw Error(ErrorKind::size_guard, "quiver isomorphism limited to " + std::to_string(limit) + " vertices");
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
  return IsoSearch(a, b).run();
}

}  // namespace biq
