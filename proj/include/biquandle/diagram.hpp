#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biquandle/error.hpp"

namespace biq {

using SemiarcId = int;

enum class Sign { positive, negative };

/// One classical crossing. Inputs are the semiarcs whose heads end here,
/// outputs the semiarcs whose tails start here.
///
/// Relations are sideways: with (lu, lo, ru, ro) from sides(),
/// ru = lu ⊻ lo and ro = lo ⊼ lu. Spelled out,
///   positive: u_out = u_in ⊻ o_out, o_in  = o_out ⊼ u_in
///   negative: u_in  = u_out ⊻ o_in, o_out = o_in ⊼ u_out
struct Crossing {
  Sign sign = Sign::positive;
  SemiarcId under_in = 0;
  SemiarcId over_in = 0;
  SemiarcId under_out = 0;
  SemiarcId over_out = 0;

  bool operator==(const Crossing&) const = default;
};

struct CrossingSides {
  SemiarcId left_under, left_over, right_under, right_over;
};

inline CrossingSides sides(const Crossing& x) {
  if (x.sign == Sign::positive) return {x.under_in, x.over_out, x.under_out, x.over_in};
  return {x.under_out, x.over_in, x.under_in, x.over_out};
}

/// An oriented virtual link diagram as abstract Gauss data. Virtual crossings
/// carry no relations and are not stored.
class SemiarcDiagram {
public:
  SemiarcDiagram() = default;

  /// Validates that every semiarc 0..count-1 has exactly one head and one
  /// tail. Throws Error(invalid_diagram).
  SemiarcDiagram(int semiarc_count, std::vector<Crossing> crossings, int free_loops = 0);

  int semiarc_count() const noexcept { return semiarc_count_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int free_loops() const noexcept { return free_loops_; }

  /// Number of link components, free loops included.
  int component_count() const;

  /// Crossing whose output is s (the tail end of s).
  int source_crossing(SemiarcId s) const { return source_[static_cast<std::size_t>(s)]; }
  /// Crossing whose input is s (the head end of s).
  int target_crossing(SemiarcId s) const { return target_[static_cast<std::size_t>(s)]; }

  bool operator==(const SemiarcDiagram& o) const {
    return semiarc_count_ == o.semiarc_count_ && crossings_ == o.crossings_ && free_loops_ == o.free_loops_;
  }

private:
  int semiarc_count_ = 0;
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::vector<int> source_;
  std::vector<int> target_;
};

// ---------------------------------------------------------------------------
// Wire format
//
//   # comment
//   X+ u_in o_in u_out o_out
//   X- u_in o_in u_out o_out
//   V in_a in_b out_a out_b      (virtual crossing, erased on parse)
//   L k                          (k crossingless components)
//
// Crossings may also be separated by ';' on a single line.

SemiarcDiagram parse_pd(std::string_view text);
std::string serialize_pd(const SemiarcDiagram& d);

/// Planar diagram code in the usual knot-table convention: each crossing
/// lists its four edge labels counterclockwise starting from the incoming
/// understrand. Accepts "PD[X[1,4,2,5], ...]", "[(1,4,2,5), ...]" or bare
/// 4-tuples. Orientation follows the understrand; components that never pass
/// under are oriented by consecutive labels.
SemiarcDiagram parse_planar_code(std::string_view text);
SemiarcDiagram from_planar_code(const std::vector<std::array<int, 4>>& code);

// ---------------------------------------------------------------------------
// Families

/// Closure of the 2-braid σ1^n. Crossing i has inputs u_in = 2i, o_in = 2i+1
/// and outputs o_out = 2i+2, u_out = 2i+3 (mod 2n); all crossings positive.
SemiarcDiagram torus_2n(int n);

/// Standard pretzel diagram: vertical twist bands side by side, adjacent
/// bands joined by caps on top and cups below, outermost ends joined around
/// the outside. Entry t gives |t| crossings; its sign picks the handedness.
SemiarcDiagram pretzel(const std::vector<int>& twists);

/// Semiarcs of pretzel(twists) carrying the top caps and the outer top arc,
/// i.e. the local maxima of the standard height function, left to right.
std::vector<SemiarcId> pretzel_maxima(const std::vector<int>& twists);

/// Closed necklace of k rings (k odd, k >= 3), 2k crossings. Ring r owns
/// semiarcs 4r..4r+3; its outer strand is {4r, 4r+1}, its inner strand
/// {4r+2, 4r+3}.
SemiarcDiagram chain(int k);

/// One-crossing unknot. Semiarc 0 is the loop, semiarc 1 the rest.
SemiarcDiagram kinked_unknot(Sign sign = Sign::positive, bool under_first = true);

struct ConnectedSum {
  SemiarcDiagram diagram;
  /// relabel[s] is the id of semiarc s of the second summand in the result.
  std::vector<SemiarcId> relabel;
};

/// Cuts s1 in d1 and s2 in d2 and cross-joins the ends: the result keeps id s1
/// for the arc leaving s1's tail into s2's head, and id m1 + s2 for the arc
/// leaving s2's tail into s1's head.
ConnectedSum connected_sum(const SemiarcDiagram& d1, SemiarcId s1, const SemiarcDiagram& d2, SemiarcId s2);

/// Adds a kink on semiarc s. The new semiarcs are m (the loop) and m+1 (the
/// continuation into s's old head).
SemiarcDiagram apply_r1(const SemiarcDiagram& d, SemiarcId s, Sign sign, bool under_first = true);

enum class R2Variant { parallel, antiparallel };

/// Pushes semiarc `over` across semiarc `under`, creating two crossings of
/// opposite sign (the first one met along `over` has sign first_sign).
/// Whether the two semiarcs bound a common face is the caller's assertion.
SemiarcDiagram apply_r2(const SemiarcDiagram& d, SemiarcId over, SemiarcId under, R2Variant variant,
                        Sign first_sign = Sign::positive);

// ---------------------------------------------------------------------------
// Strands (maximal overpasses)

struct Strand {
  std::vector<SemiarcId> semiarcs;  // in orientation order
  bool closed = false;              // component that never passes under
};

struct CrossingStrands {
  int over = 0;
  int under_in = 0;
  int under_out = 0;
};

struct StrandDecomposition {
  std::vector<Strand> strands;
  std::vector<int> strand_of;              // semiarc -> strand index
  std::vector<CrossingStrands> crossings;  // per crossing
};

/// Strands are numbered by their smallest semiarc id.
StrandDecomposition strands(const SemiarcDiagram& d);

// ---------------------------------------------------------------------------

struct KnotRecord {
  std::string name;
  SemiarcDiagram diagram;
  std::optional<long long> determinant;
};

}  // namespace biq
