#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it in-process.

#include <ostream>
#include <string>
#include <vector>

namespace quartic::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kValidation = 2,
  kIo = 3,
  kDivergence = 4,
};

/// `args` excludes the program name. Data goes to --output (or `out`),
/// diagnostics and reports to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quartic::cli
