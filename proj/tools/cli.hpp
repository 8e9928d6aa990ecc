#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace macrocheck::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Runs the command line `args` (args[0] is the program name). Human-readable
/// output goes to `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace macrocheck::cli
