#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctxstat {

enum ExitStatus : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitSolver = 3,
};

enum class ErrorKind;

// Exit status reported for a library error of the given kind.
int exit_status_for(ErrorKind kind);

// Runs one command line (without the program name). Normal output goes to
// `out`, diagnostics to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctxstat
