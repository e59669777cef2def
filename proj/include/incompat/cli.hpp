#pragma once

#include <string>
#include <vector>

namespace incompat {

struct CliResult {
  int exit_code = 0;
  std::string out;  // report or generated payload
  std::string err;  // diagnostics
};

// Runs the command-line frontend on the given arguments (program name not
// included). All output is returned, never printed, so callers can assert
// byte-level determinism.
//
// Exit codes: 0 success, 1 usage/parse error, 2 mathematical precondition
// failure, 3 enumeration budget exceeded, 4 invariant check failed.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace incompat
