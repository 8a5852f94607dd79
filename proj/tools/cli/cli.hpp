#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperlab::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kDefinitive = 0,    ///< verdict reached (evidence found, violation certified, check passed)
    kInputError = 1,
    kUndetermined = 2,  ///< horizon exhausted or a sampled check failed
};

/// Runs one invocation. `args` excludes the program name. Reports go to `out`
/// (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperlab::cli
