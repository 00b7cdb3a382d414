#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sncd::cli {

enum ExitCode { Ok = 0, ValidationFailure = 1, UsageError = 2 };

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sncd::cli
