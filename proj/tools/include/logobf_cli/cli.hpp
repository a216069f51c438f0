#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logobf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 success, 1 verification or processing failure, 2 usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logobf::cli
