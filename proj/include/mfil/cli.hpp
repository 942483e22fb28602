#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mfil {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_usage = 2, exit_io = 3 };

/// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mfil
