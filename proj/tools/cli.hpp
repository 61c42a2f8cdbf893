#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace euclid::cli {

// Exit codes: 0 success, 1 a checked property failed (script assert, macro
// postcondition, verify invariant), 2 malformed input or infeasible problem.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kBadInput = 2;

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Example invocations shown under --help, without the program name.
const std::vector<std::string>& help_examples();

}  // namespace euclid::cli
