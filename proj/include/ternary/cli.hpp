#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ternary::cli {

enum ExitCode : int
{
    kSuccess = 0,
    kFailure = 1,
    kValidation = 2,
    kResourceLimit = 3,
};

/** Runs one command. `args` excludes the program name. JSON goes to `out`, diagnostics to `err`. */
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ternary::cli
