#include <cstdio>
#include <string>
#include <vector>

#include "gammaforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  gammaforge::CliResult result = gammaforge::runCli(args);
  if (!result.output.empty()) std::fputs(result.output.c_str(), stdout);
  return result.exitCode;
}
