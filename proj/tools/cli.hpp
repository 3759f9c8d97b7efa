#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jaco::cli {

/// Exit codes of the `jaco` command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name), writing data to
/// `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jaco::cli
