#pragma once

#include <iosfwd>

namespace geodex::app {

// Exit codes beyond 0 (success) and 1 (failed verification, other errors).
inline constexpr int kExitParse = 2;     // malformed input, unreadable file, bad flags
inline constexpr int kExitCapacity = 3;  // too many vertices, search budget exhausted

/// `geodex solve|verify|table|serve`. Output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace geodex::app
