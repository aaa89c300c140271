#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simlat {

/// Exit codes of the simlat command.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInvalidInput = 2,
  kExitBudget = 3,
  /// A clean predicate disagreed with the geometric oracle, or a witness
  /// failed re-verification.
  kExitInconsistent = 4,
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simlat
