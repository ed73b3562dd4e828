#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmut {

// Runs the command line with args[0] as the program name. Returns 0 on
// success, 1 on domain errors and 2 on usage errors; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmut
