#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzytop {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1,
    kExitInvalidArgs = 2,
    kExitBudget = 3,
    kExitIo = 4,
};

/// Runs the command line `args` (without the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fuzzytop
