#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bohrkit::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitPass = 0,
  kExitMathFail = 1,
  kExitUsage = 2,
};

/// Runs the command line `args` (args[0] is the program name), writing the
/// text report to `out` and diagnostics to `err`. JSON and CSV reports go to
/// the files named by --json and --csv.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bohrkit::cli
