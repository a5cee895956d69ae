#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tiltbg {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,        // command succeeded / inequality holds
  kExitViolated = 1,  // inequality or check fails
  kExitUsage = 2,     // malformed input, usage or domain error
  kExitInternal = 3,  // an internal consistency check failed
};

/// Runs the `tiltbg` command line with `args` (excluding the program name).
/// JSON arguments may be inline, "@file", or "-" for `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tiltbg
