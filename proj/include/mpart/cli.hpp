#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpart::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 on a verification
/// failure or cross-method disagreement, 2 on usage or resource errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mpart::cli
