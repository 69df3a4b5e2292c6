#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sfdt::cli {

enum ExitCode : int {
  kYes = 0,
  kNo = 1,
  kUsage = 2,
  kInputFormat = 3,
  kAborted = 4,
};

/// args[0] is the program name. JSON results go to `out`, diagnostics to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sfdt::cli
