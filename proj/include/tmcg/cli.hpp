// Command-line front end.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tmcg {

/// Runs one command line (args exclude the program name). Returns the exit
/// code: 0 success, 1 failed check or computation, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tmcg
