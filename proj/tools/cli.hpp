#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace peri {

/// Runs the command line tool on `args` (without the program name).  Returns
/// the exit code: 0 success, 2 malformed input, 3 a mathematical
/// precondition or check failed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace peri
