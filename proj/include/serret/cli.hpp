#pragma once

#include <iosfwd>

namespace serret {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitInvalidSpec = 2,
  kExitUndecided = 3,
  kExitUsage = 64,
};

/// Runs one subcommand; reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace serret
