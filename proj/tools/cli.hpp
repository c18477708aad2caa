#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covsys::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

/// Runs one invocation. `args` excludes the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace covsys::cli
