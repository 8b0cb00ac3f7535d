#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathideal::cli {

/// Exit codes: 0 success, 1 a check or formula comparison failed, 2 invalid arguments.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `pathideal` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathideal::cli
