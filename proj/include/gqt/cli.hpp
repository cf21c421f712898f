#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gqt {

// Exit codes shared by every subcommand.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitInconclusive = 2, kExitUsage = 3 };

// Runs the command line `args` (without the program name). Reports go to
// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gqt
