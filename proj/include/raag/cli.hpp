#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace raag {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,         // certified / success / true
  kExitNegative = 1,   // refuted / check failed / false
  kExitUndecided = 2,  // inconclusive, budget exhausted
  kExitInputError = 3,
};

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace raag
