#pragma once

#include <iosfwd>

namespace shops::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNotApplicable = 3;

/// Full command-line front end: parses argv, runs the requested operation,
/// writes one JSON report to `out` and diagnostics to `err`, and returns
/// the exit code. Lives in the library so tests can drive it in-process.
int command_dispatch(int argc, const char* const* argv, std::ostream& out,
                     std::ostream& err);

}  // namespace shops::cli
