#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace refdist {

/// Runs the `refdist` command line. Returns 0 on success, 1 on an input
/// error (bad arguments, malformed files) and 2 on a numerical failure.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace refdist
