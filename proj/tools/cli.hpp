#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace menergy::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kInputError = 3,
};

/// Runs one CLI invocation. `args` excludes the program name. `in` backs
/// `--input -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace menergy::cli
