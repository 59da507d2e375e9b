#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invforge {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // verification or membership failed
inline constexpr int kExitBadInput = 2;

// Runs one command line (args excludes the program name) and returns the
// exit code. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invforge
