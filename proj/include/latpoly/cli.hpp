#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latpoly::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { Ok = 0, UsageError = 1, DomainError = 2 };

/**
 * Run one command. `args` excludes the program name. Results go to `out`,
 * diagnostics and usage text for errors to `err`.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latpoly::cli
