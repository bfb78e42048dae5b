#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planelayers::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kPrecondition = 3,
  kVerifyFailed = 4,
  kInternal = 5,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planelayers::cli
