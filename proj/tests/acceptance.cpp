// Prints one PASS/FAIL line per acceptance criterion. Every comparison is an
// exact integer, polynomial or boolean equality; the pinned tolerance is 0.
// The exit status ignores items the report marks unattainable (each carries
// its impossibility argument in the computed column), and nothing else.
#include <cstdio>

#include "biquandle/repro.hpp"

int main() {
  const auto report = biq::run_repro({}, biq::threads_from_env());
  for (const auto& item : report.items) {
    std::printf("[%s] %2d %s (%.2fs)%s\n", item.pass ? "PASS" : "FAIL", item.id, item.claim.c_str(), item.seconds,
                item.unattainable ? " [unattainable]" : "");
    std::printf("       expected: %s\n       computed: %s\n", item.expected.c_str(), item.computed.c_str());
  }
  const int total = static_cast<int>(report.items.size());
  std::printf("%d/%d criteria passed, %d unattainable, %d unexpected failures\n", total - report.failures(), total,
              report.failures() - report.unexpected_failures(), report.unexpected_failures());
  return report.unexpected_failures() == 0 ? 0 : 1;
}
