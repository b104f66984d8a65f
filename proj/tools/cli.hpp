#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace folkman::cli {

enum ExitCode : int {
  kSuccess = 0,
  kAssertionFailure = 1,  // theorem violation or failed consistency check
  kUsageError = 2,        // bad flags or unreadable input
  kBudgetExceeded = 3,
};

/// Runs one command line (without the program name). The JSON document
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace folkman::cli
