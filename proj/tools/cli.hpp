#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace avdiff::cli {

/// Runs the `avdiff` command line. `args` excludes the program name.
/// Returns 0 on success, 1 on invalid input, 2 when a solver fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace avdiff::cli
