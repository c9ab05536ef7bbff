#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kinkfac::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDomain = 2,
  kExitIo = 3,
  kExitNumerical = 4,
};

/// Parses args (args[0] is the program name), dispatches, prints the JSON
/// report to out and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kinkfac::cli
