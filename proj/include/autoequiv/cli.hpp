#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace autoequiv {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitTrue = 0,   // valid / equivalent / predicate holds / success
  kExitFalse = 1,  // not equivalent / predicate fails / witness rejected
  kExitError = 2,  // invalid input, io error, budget exhausted, bad flags
};

/// Runs the command line `args` (args[0] is the program name). All output
/// goes to `out` and `err`; nothing is read from stdin.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace autoequiv
