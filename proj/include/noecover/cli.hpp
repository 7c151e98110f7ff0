#pragma once

#include <string>
#include <vector>

namespace noecover {

struct CliResult {
  int exit_code = 0; // 0 computed, 1 property violated, 2 input error
  std::string out;
  std::string err;
};

// The whole command-line surface; argv without the program name.
// Deterministic: for fixed inputs the output is byte-stable.
CliResult run_cli(const std::vector<std::string>& args);

} // namespace noecover
