#pragma once

// Command-line front end. Exit codes: 0 yes, 1 no, 2 input error,
// 3 internal invariant violation.

#include <iosfwd>
#include <string>
#include <vector>

namespace planar {

enum ExitCode : int { exit_yes = 0, exit_no = 1, exit_input_error = 2, exit_invariant = 3 };

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planar
