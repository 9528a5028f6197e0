#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mdssd {

/// Process exit statuses of the command-line tool.
enum ExitCode : int {
  kExitVerified = 0,
  kExitUsage = 1,
  kExitConditionFailed = 2,
  kExitBlocked = 3,
  kExitCapExceeded = 4,
};

/// Runs one command line (without the program name) and returns its exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdssd
