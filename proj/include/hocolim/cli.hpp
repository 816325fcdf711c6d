#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hocolim::io {

enum ExitCode { exit_ok = 0, exit_parse = 2, exit_validation = 3, exit_infeasible = 4 };

/// Runs one command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hocolim::io
