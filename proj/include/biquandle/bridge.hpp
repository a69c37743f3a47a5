#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "biquandle/algebra.hpp"
#include "biquandle/diagram.hpp"

namespace biq {

/// One coloring move: at `crossing`, whose overstrand is colored, strand
/// `colored` copies its token from the adjacent understrand `from`.
struct ColoringStep {
  int crossing = 0;
  int colored = 0;
  int from = 0;
  int token = 0;
};

struct SeedReport {
  std::vector<int> seeds;
  bool saturated = false;
  std::vector<ColoringStep> sequence;
  /// token per strand (1..k for seed i), 0 where uncolored
  std::vector<int> tokens;
  /// Seeds needed when saturated: strand seeds plus one per free loop.
  std::optional<int> b1_upper;
};

/// Applies coloring moves until none is available, always taking the lowest
/// crossing index with an eligible move. Seeds receive tokens 1..k in order.
/// Throws Error(invalid_parameter) for unknown or repeated strand ids.
SeedReport wirtinger_saturate(const SemiarcDiagram& d, const std::vector<int>& seeds);

/// Same closure over a precomputed decomposition, without the step log.
/// colored[i] != 0 marks seeds on entry and the saturated set on return.
void saturate_strands(const StrandDecomposition& sd, std::vector<char>& colored);

struct SeedSearchResult {
  int size = 0;                 // strand seeds + free loops
  std::vector<int> witness;     // lexicographically least saturating strand set
};

inline constexpr int default_seed_kmax = 6;

/// Exhaustive search over strand subsets of increasing size (lexicographic
/// within a size). Absent when no set of at most k_max strands saturates.
std::optional<SeedSearchResult> min_seed_size(const SemiarcDiagram& d, int k_max = default_seed_kmax);

/// Smallest b with |X|^b >= count, maximized over the observations.
/// Quandle counts bound b1; general biquandle counts bound b2.
struct CountObservation {
  int algebra_size = 0;
  std::uint64_t count = 0;
};

int counting_lower_bound(const std::vector<CountObservation>& counts);
int b1_lower(const std::vector<std::pair<Quandle, std::uint64_t>>& counts);
int b2_lower(const std::vector<std::pair<FiniteBiquandle, std::uint64_t>>& counts);

}  // namespace biq
