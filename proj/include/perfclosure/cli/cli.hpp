#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace perfclosure {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // verification failed or a mathematical precondition does not hold
  kExitUsage = 2,    // bad options, unparsable input or malformed certificate
};

/// Runs the tool on args (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace perfclosure
