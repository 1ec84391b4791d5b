#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ssred {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInvalidInput = 2,
};

/// Runs the command line `args` (without the program name) and returns the
/// exit status. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssred
