#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gendawson::cli {

/// Exit statuses of the command-line front end.
enum ExitCode : int { kOk = 0, kNumericalError = 1, kUsageError = 2 };

/// Runs one command. args excludes the program name. Data goes to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gendawson::cli
