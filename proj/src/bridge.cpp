#include "biquandle/bridge.hpp"

#include <algorithm>

namespace biq {

namespace {

void check_seeds(const StrandDecomposition& sd, const std::vector<int>& seeds) {
  std::vector<char> seen(sd.strands.size(), 0);
  for (int s : seeds) {
    if (s < 0 || s >= static_cast<int>(sd.strands.size()))
      throw Error(ErrorKind::invalid_parameter, "unknown strand " + std::to_string(s) + " (diagram has " +
                                                    std::to_string(sd.strands.size()) + " strands)");
    if (seen[static_cast<std::size_t>(s)]) throw Error(ErrorKind::invalid_parameter, "strand " + std::to_string(s) + " seeded twice");
    seen[static_cast<std::size_t>(s)] = 1;
  }
}

/// First eligible move at crossing c, if any: returns {colored, from}.
std::optional<std::pair<int, int>> move_at(const CrossingStrands& x, const std::vector<int>& token) {
  if (!token[static_cast<std::size_t>(x.over)]) return std::nullopt;
  const bool in = token[static_cast<std::size_t>(x.under_in)] != 0;
  const bool out = token[static_cast<std::size_t>(x.under_out)] != 0;
  if (in && !out) return std::pair{x.under_out, x.under_in};
  if (out && !in) return std::pair{x.under_in, x.under_out};
  return std::nullopt;
}

}  // namespace

SeedReport wirtinger_saturate(const SemiarcDiagram& d, const std::vector<int>& seeds) {
  const auto sd = strands(d);
  check_seeds(sd, seeds);
  if (seeds.empty() && !sd.strands.empty())
    throw Error(ErrorKind::invalid_parameter, "seed set must be nonempty");

  SeedReport report;
  report.seeds = seeds;
  report.tokens.assign(sd.strands.size(), 0);
  for (std::size_t i = 0; i < seeds.size(); ++i) report.tokens[static_cast<std::size_t>(seeds[i])] = static_cast<int>(i + 1);

  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t c = 0; c < sd.crossings.size(); ++c) {
      if (auto mv = move_at(sd.crossings[c], report.tokens)) {
        auto [colored, from] = *mv;
        const int token = report.tokens[static_cast<std::size_t>(from)];
        report.tokens[static_cast<std::size_t>(colored)] = token;
        report.sequence.push_back({static_cast<int>(c), colored, from, token});
        moved = true;
        break;
      }
    }
  }
  report.saturated = std::all_of(report.tokens.begin(), report.tokens.end(), [](int t) { return t != 0; });
  if (report.saturated) report.b1_upper = static_cast<int>(seeds.size()) + d.free_loops();
  return report;
}

void saturate_strands(const StrandDecomposition& sd, std::vector<char>& colored) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& x : sd.crossings) {
      if (!colored[static_cast<std::size_t>(x.over)]) continue;
      char& in = colored[static_cast<std::size_t>(x.under_in)];
      char& out = colored[static_cast<std::size_t>(x.under_out)];
      if (in != out) {
        in = out = 1;
        moved = true;
      }
    }
  }
}

std::optional<SeedSearchResult> min_seed_size(const SemiarcDiagram& d, int k_max) {
  const auto sd = strands(d);
  const int n = static_cast<int>(sd.strands.size());
  if (n == 0) return SeedSearchResult{d.free_loops(), {}};

  std::vector<char> colored(static_cast<std::size_t>(n));
  for (int k = 1; k <= std::min(k_max, n); ++k) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::fill(colored.begin(), colored.end(), 0);
      for (int s : pick) colored[static_cast<std::size_t>(s)] = 1;
      saturate_strands(sd, colored);
      if (std::all_of(colored.begin(), colored.end(), [](char c) { return c != 0; }))
        return SeedSearchResult{k + d.free_loops(), pick};
      // next k-subset in lexicographic order
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

int counting_lower_bound(const std::vector<CountObservation>& counts) {
  int best = 0;
  for (const auto& obs : counts) {
    if (obs.algebra_size < 2)
      throw Error(ErrorKind::invalid_parameter, "counting bound needs an algebra with at least 2 elements");
    if (obs.count == 0)
      throw Error(ErrorKind::internal, "zero coloring count: constant colorings always exist");
    int b = 0;
    unsigned __int128 power = 1;
    while (power < obs.count) {
      power *= static_cast<unsigned>(obs.algebra_size);
      ++b;
    }
    best = std::max(best, b);
  }
  return best;
}

int b1_lower(const std::vector<std::pair<Quandle, std::uint64_t>>& counts) {
  std::vector<CountObservation> obs;
  for (const auto& [q, c] : counts) obs.push_back({q.size(), c});
  return counting_lower_bound(obs);
}

int b2_lower(const std::vector<std::pair<FiniteBiquandle, std::uint64_t>>& counts) {
  std::vector<CountObservation> obs;
  for (const auto& [b, c] : counts) obs.push_back({b.size(), c});
  return counting_lower_bound(obs);
}

}  // namespace biq
