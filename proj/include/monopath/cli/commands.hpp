#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace monopath::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kCapExceeded = 3,
};

// Entry point of the monopath tool. args excludes the program name. Output
// goes to --out when given, otherwise to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monopath::cli
