#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symdiff {

// Runs the command-line tool on the given arguments (program name excluded).
// Output and diagnostics go to the supplied streams, so tests can drive the
// tool in-process. Returns the process exit code: 0 on success, 1 for invalid
// input, 2 when a computation or verification fails.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace symdiff
