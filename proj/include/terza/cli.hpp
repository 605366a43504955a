#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace terza::cli {

// Exit codes of the command line tool.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kNumericalDegeneracy = 3,
};

// Runs the tool on `args` (program name excluded). Reports and tables go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace terza::cli
