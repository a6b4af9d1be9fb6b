#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigma_cli {

enum ExitCode : int {
  kSuccess = 0,
  kError = 1,
  kCheckFailed = 2,   // only under --strict
  kNoSolution = 3,
  kOracleInfeasible = 4,
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace sigma_cli
