#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eis::cli {

enum ExitCode : int {
    ok = 0,
    usage_error = 1,
    io_error = 2,
    budget_exhausted = 3,
};

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eis::cli
