#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biq {

/// Exit statuses of run_cli.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;  // computation failed or a check came out false
inline constexpr int exit_usage = 2;

/// Runs the `biq` command line on `args` (program name excluded). All
/// output goes to the given streams, so the call is reentrant.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biq
