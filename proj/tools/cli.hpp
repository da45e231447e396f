#pragma once

#include <iosfwd>

namespace paige::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. Reports go to `out`, diagnostics to `err`.
/// Returns 0 when every requested check passes, 1 on a verification failure,
/// 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace paige::cli
