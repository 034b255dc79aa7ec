#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtrunc::cli {

enum ExitCode : int { kAllPass = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtrunc::cli
