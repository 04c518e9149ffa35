#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcatkit::cli {

enum ExitCode : int { kSuccess = 0, kValidationErrors = 1, kUsage = 2, kFailure = 3 };

/// Runs one command line. `args` excludes the program name; `in` backs the
/// "-" file argument.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace dcatkit::cli
