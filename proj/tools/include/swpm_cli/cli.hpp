#pragma once

#include <iosfwd>

namespace swpm::cli {

/// Exit codes of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kConfigError = 2;
inline constexpr int kNumericalError = 3;

/// Entry point of the `swpm` tool: subcommands run, collide, interact1d,
/// riemann-debug and rates.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace swpm::cli
