#pragma once

#include <string>
#include <vector>

namespace biq {

/// One acceptance claim, evaluated end to end.
struct ReproItem {
  int id = 0;
  std::string claim;
  std::string expected;    // value plus provenance tag
  std::string computed;
  bool pass = false;
  /// Failed only on a sub-claim shown to be impossible; the reason is part
  /// of `computed`.
  bool unattainable = false;
  double seconds = 0.0;
};

struct ReproReport {
  std::vector<ReproItem> items;  // ordered by id

  bool all_passed() const;
  int failures() const;
  /// Failures not marked unattainable.
  int unexpected_failures() const;
};

inline constexpr int repro_item_count = 12;

/// Runs the selected claims (all when `ids` is empty) on up to `threads`
/// worker threads. Output order is by id regardless of scheduling.
ReproReport run_repro(const std::vector<int>& ids = {}, int threads = 1);

/// $BIQ_THREADS when it parses as a positive integer, otherwise 1.
int threads_from_env();

}  // namespace biq
