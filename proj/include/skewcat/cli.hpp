#ifndef SKEWCAT_CLI_HPP
#define SKEWCAT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace skewcat::cli {

// Runs one command-line invocation.  Returns the process exit code:
// 0 on success, 1 on a verification failure, 2 on malformed input or flags.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewcat::cli

#endif  // SKEWCAT_CLI_HPP
