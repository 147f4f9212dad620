#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace twr::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

struct Environment {
  // Value of TWR_TOL, if set.
  std::optional<std::string> tolerance;

  static Environment from_process();
};

// Runs `twr` with args (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env);

}  // namespace twr::cli
