#pragma once

#include <ostream>

namespace radstat {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCounterexample = 3;

/// Parses argv and runs one subcommand: analyze, construct, transform,
/// enumerate, spanning or verify. Results go to `out` (or --output),
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace radstat
