#include <cstdio>

#include "noecover/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  noecover::CliResult result = noecover::run_cli(args);
  if (!result.out.empty()) std::fputs(result.out.c_str(), stdout);
  if (!result.err.empty()) std::fputs(result.err.c_str(), stderr);
  return result.exit_code;
}
