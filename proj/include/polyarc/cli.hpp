#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyarc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kComputation = 2,
  kStrictFailure = 3,
};

struct RunOptions {
  bool color = false;  // ANSI colours in human tables
};

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const RunOptions& options = {});

}  // namespace polyarc::cli
