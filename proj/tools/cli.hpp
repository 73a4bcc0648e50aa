#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace densest::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kUsage = 2 };

/// Runs one command line (args[0] is the program name). JSON results go to
/// `out` (or --output), diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace densest::cli
