#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bjts::cli {

/// Exit codes: 0 success, 1 user error (flags, files, data), 2 computational failure.
enum ExitCode : int { kOk = 0, kUserError = 1, kComputationError = 2 };

/// Runs one subcommand. `args` excludes the program name, e.g. {"acf", "--input", "s.csv"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bjts::cli
