// The `omegastar` command set as a library, so it can be driven in-process.

#ifndef OMEGASTAR_TOOLS_CLI_HPP
#define OMEGASTAR_TOOLS_CLI_HPP

#include <istream>
#include <string>
#include <vector>

namespace omegastar::tools {

struct CommandResult {
  int exit_code = 0;        // 0 success, 1 domain error, 2 parse error
  std::string payload;      // canonical encoding of the result
  std::string diagnostics;  // never empty on a nonzero exit
};

/// args excludes the program name. Arguments naming inputs accept a file
/// path, "-" for `in`, inline JSON, or a shorthand such as "successor",
/// "evens" or "mod 3". With --output FILE the payload is also written there.
CommandResult run_command(const std::vector<std::string>& args, std::istream& in);

}  // namespace omegastar::tools

#endif  // OMEGASTAR_TOOLS_CLI_HPP
