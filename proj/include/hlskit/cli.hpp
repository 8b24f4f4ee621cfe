#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hlskit {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitCap = 2, kExitFailure = 3 };

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits a chain literal such as "2|- < 2 5|2" at '<' and trims each piece.
std::vector<std::string> split_chain_literal(const std::string& text);

}  // namespace hlskit
