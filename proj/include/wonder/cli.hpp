#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wonder::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // sweep found invariant violations
  kUsage = 2,
  kDomain = 3,
};

/// Runs one command. `args` excludes the program name. Rendered output goes
/// to `out` (or to the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wonder::cli
