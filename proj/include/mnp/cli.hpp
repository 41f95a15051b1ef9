#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mnp {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kDomain = 3, kVerification = 4 };

/// Runs one CLI invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mnp
