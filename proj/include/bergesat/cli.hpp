#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bergesat::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidSpec = 1,
  kParseError = 2,
  kBudgetExceeded = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bergesat::cli
