#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpkit {

// Exit codes shared by every command.
inline constexpr int kExitAffirmative = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

// Runs one command line (without the program name). The JSON report goes to
// `out`, a one-line human summary or diagnostics to `err`. Returns the exit
// code; never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpkit
