#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace netforge {

// Process exit codes of the netforge tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitNegative = 1,  // verification failed / nothing found
    kExitUsage = 2,     // bad flags or malformed input
    kExitStalled = 3,   // greedy run stopped before b^m boxes
    kExitResource = 4,  // overflow or search budget exhausted
};

// Runs the command line `args` (without the program name). Data goes to
// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace netforge
