#pragma once

#include <vector>

#include "biquandle/diagram.hpp"

namespace biq::detail {

/// Unoriented planar assembly of crossings. Each crossing has four slots in
/// counterclockwise order; one opposite pair is the overstrand. Terminals
/// (crossing slots or free wire ends) are glued together, then build()
/// orients every component by walking through crossings straight across.
class PlanarBuilder {
public:
  /// over_pair 0: slots {0,2} pass over; 1: slots {1,3} pass over.
  int add_crossing(int over_pair);
  int slot(int crossing, int s) const { return 4 * crossing + s; }
  int add_free_terminal();
  void connect(int a, int b);

  /// Orientation constraint: the component must enter its crossing here.
  void require_incoming(int slot_terminal) { required_.push_back(slot_terminal); }
  /// Used only for components that no required slot reaches.
  void prefer_incoming(int slot_terminal) { preferred_.push_back(slot_terminal); }

  struct Result {
    SemiarcDiagram diagram;
    std::vector<SemiarcId> semiarc_of_terminal;  // by terminal_index; -1 on crossingless loops
  };

  Result build() const;

  /// Index of terminal t in Result::semiarc_of_terminal.
  int terminal_index(int t) const { return t >= 0 ? t : 4 * static_cast<int>(over_pair_.size()) + (-1 - t); }

private:
  std::vector<int> over_pair_;
  int free_terminals_ = 0;
  std::vector<std::pair<int, int>> links_;
  std::vector<int> required_;
  std::vector<int> preferred_;
};

}  // namespace biq::detail
