#include "planar.hpp"

#include <numeric>
#include <string>

namespace biq::detail {

namespace {

// Free terminals are numbered after all crossing slots once the crossing count
// is known, so they are stored as negative placeholders until build().
constexpr int free_base = -1;

}  // namespace

int PlanarBuilder::add_crossing(int over_pair) {
  over_pair_.push_back(over_pair);
  return static_cast<int>(over_pair_.size()) - 1;
}

int PlanarBuilder::add_free_terminal() { return free_base - free_terminals_++; }

void PlanarBuilder::connect(int a, int b) { links_.emplace_back(a, b); }

PlanarBuilder::Result PlanarBuilder::build() const {
  const int slots = 4 * static_cast<int>(over_pair_.size());
  const int total = slots + free_terminals_;
  auto resolve = [&](int t) { return terminal_index(t); };

  std::vector<int> parent(static_cast<std::size_t>(total));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : links_) parent[find(resolve(a))] = find(resolve(b));

  // Every glued group holds exactly two crossing slots (an edge) or none
  // (a crossingless loop).
  std::vector<std::vector<int>> group_slots(static_cast<std::size_t>(total));
  for (int s = 0; s < slots; ++s) group_slots[find(s)].push_back(s);
  std::vector<int> partner(static_cast<std::size_t>(slots), -1);
  int free_loops = 0;
  for (int g = 0; g < total; ++g) {
    if (find(g) != g) continue;
    const auto& members = group_slots[g];
    if (members.empty()) {
      ++free_loops;
    } else if (members.size() == 2) {
      partner[members[0]] = members[1];
      partner[members[1]] = members[0];
    } else {
      throw Error(ErrorKind::invalid_diagram, "planar assembly: an edge joins " + std::to_string(members.size()) +
                                                  " crossing slots");
    }
  }

  // Orientation walk. incoming[s]: 1 in, 0 out, -1 unvisited.
  std::vector<int> incoming(static_cast<std::size_t>(slots), -1);
  std::vector<SemiarcId> edge_of_slot(static_cast<std::size_t>(slots), -1);
  int next_id = 0;
  auto walk = [&](int start) {
    int in = start;
    do {
      incoming[in] = 1;
      int out = 4 * (in / 4) + (in % 4 + 2) % 4;
      incoming[out] = 0;
      int to = partner[out];
      edge_of_slot[out] = edge_of_slot[to] = next_id++;
      in = to;
    } while (in != start);
  };
  for (int s : required_)
    if (incoming[s] == -1) walk(s);
  for (int s : required_)
    if (incoming[s] != 1)
      throw Error(ErrorKind::invalid_diagram,
                  "inconsistent orientation at crossing " + std::to_string(s / 4) + " slot " + std::to_string(s % 4));
  for (int s : preferred_)
    if (incoming[s] == -1) walk(s);
  for (int s = 0; s < slots; ++s)
    if (incoming[s] == -1) walk(s);

  std::vector<Crossing> crossings;
  for (std::size_t c = 0; c < over_pair_.size(); ++c) {
    const int base = 4 * static_cast<int>(c);
    const int under_first = over_pair_[c] == 0 ? 1 : 0;
    const int over_first = over_pair_[c];
    int under_in = incoming[base + under_first] ? under_first : under_first + 2;
    int over_in = incoming[base + over_first] ? over_first : over_first + 2;
    int under_out = (under_in + 2) % 4;
    int over_out = (over_in + 2) % 4;
    Crossing x;
    x.sign = over_out == (under_in + 1) % 4 ? Sign::positive : Sign::negative;
    x.under_in = edge_of_slot[base + under_in];
    x.over_in = edge_of_slot[base + over_in];
    x.under_out = edge_of_slot[base + under_out];
    x.over_out = edge_of_slot[base + over_out];
    crossings.push_back(x);
  }

  Result result{SemiarcDiagram(next_id, std::move(crossings), free_loops), {}};
  result.semiarc_of_terminal.assign(static_cast<std::size_t>(total), -1);
  for (int t = 0; t < total; ++t) {
    const auto& members = group_slots[find(t)];
    if (!members.empty()) result.semiarc_of_terminal[t] = edge_of_slot[members[0]];
  }
  return result;
}

}  // namespace biq::detail
