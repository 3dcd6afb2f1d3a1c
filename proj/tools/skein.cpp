#include <iostream>
#include <vector>

#include "skein/cli_runner.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  skein::CliResult result = skein::run_subcommand(args);
  if (!result.output.empty()) std::cout << result.output;
  if (!result.diagnostics.empty()) std::cerr << result.diagnostics << "\n";
  return result.exit_code;
}
