#pragma once

#include <string>
#include <vector>

namespace skein {

// Runs one CLI invocation. Exit codes: 0 success, 1 math-domain error,
// 2 usage error. Output is what would go to stdout; diagnostics to stderr.
struct CliResult {
  int exit_code = 0;
  std::string output;
  std::string diagnostics;
};

CliResult run_subcommand(const std::vector<std::string>& args);

}  // namespace skein
