#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exact2::cli {

/// Exit codes shared by all subcommands.
enum ExitCode : int { kYes = 0, kNo = 1, kError = 2 };

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exact2::cli
