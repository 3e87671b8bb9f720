#pragma once

#include <ostream>

namespace cosmopoly {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
/// Bad command line, unreadable or malformed graph file, unsupported input.
inline constexpr int kUsage = 2;
inline constexpr int kBudget = 3;
/// Methods disagree, a theorem check failed, or a structural check failed.
inline constexpr int kCheckFailed = 4;
}  // namespace exit_code

/// Entry point of the `cosmopoly` tool. Results go to out, diagnostics to
/// err; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cosmopoly
