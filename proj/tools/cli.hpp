#ifndef TESSCENSUS_TOOLS_CLI_HPP
#define TESSCENSUS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tesscensus::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kOutOfScope = 2,
    kMismatch = 3,
    kStructureViolation = 4,
};

/// Runs one command line (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tesscensus::cli

#endif  // TESSCENSUS_TOOLS_CLI_HPP
