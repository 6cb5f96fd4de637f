// Command-line front end.  run() is the whole program minus main(), so tests
// can drive it with argument vectors and capture the output.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace artinkms::cli {

enum ExitCode : int {
  kSuccess      = 0,
  kNegative     = 1,  // a verdict came out false, or a verification failed
  kInconclusive = 2,  // a cap was hit before a verdict
  kInputError   = 3,  // bad arguments, bad monoid file, unmet precondition
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace artinkms::cli
