#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radx::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kUnsupported = 2, kMismatch = 3 };

// Runs the command line; reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radx::cli
