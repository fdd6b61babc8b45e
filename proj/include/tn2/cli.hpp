#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tn2 {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kPass = 0, kCheckFailed = 1, kInputError = 2 };

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tn2
