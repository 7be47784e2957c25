#ifndef GAMMAFORGE_CLI_HPP
#define GAMMAFORGE_CLI_HPP

#include <string>
#include <vector>

namespace gammaforge {

struct CliResult {
  int exitCode = 0;    // 0 success / all-pass, 1 property failure, 2 input error
  std::string output;  // the JSON document (empty when written to --output)
};

CliResult runCli(const std::vector<std::string>& args);

}  // namespace gammaforge

#endif
