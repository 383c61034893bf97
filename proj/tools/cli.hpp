#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qudit::cli {

/// Exit codes: 0 success, 1 usage or input error, 2 a checked input is not a
/// state.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotState = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qudit::cli
