#pragma once

#include <ostream>

namespace skipgram::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `skipgram` command line with the given arguments (argv[0] is the
/// program name). Normal output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace skipgram::cli
