#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace erogers {

// Exit codes of the command-line tool.
enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_precondition = 3 };

// Runs one command; args excludes the program name.
int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace erogers
