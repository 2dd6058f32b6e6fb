#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncd::cli {

enum ExitCode : int {
    kSuccess = 0,
    kNegative = 1,
    kInputError = 2,
    kResourceLimit = 3,
};

/// Runs the command line front end. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ncd::cli
