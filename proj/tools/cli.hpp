#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace collatz::cli {

// Exit codes: 0 success / all checks passed, 1 violation or arithmetic
// anomaly (overflow, no convergence within the cap), 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line `args` (args[0] is the program name). Normal output
// goes to `out` unless --output redirects it; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace collatz::cli
