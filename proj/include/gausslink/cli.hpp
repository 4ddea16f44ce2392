#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gausslink {

extern const char* const tool_version;

// Runs the command-line tool on `args` (without argv[0]).  Returns the
// process exit code: 0 success, 1 data or verification error, 2 usage error.
// Output for identical (inputs, seed, flags) is byte-identical.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gausslink
