#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pepys::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitDomain = 3,
};

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace pepys::cli
