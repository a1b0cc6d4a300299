#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctsum::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Returns 0 when every
/// requested check passes, 1 when a check fails (any report is still
/// written) and 2 for usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctsum::cli
