#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace expdioph::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kVerifyFail = 3,
  kNotSolution = 10,
};

/// Runs the command line (args excludes the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace expdioph::cli
