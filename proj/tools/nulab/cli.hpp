#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nulab::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kConjectureCounterexample = 2,
  kProvedRuleViolation = 3,
};

/// The whole command line minus argv[0]. Reads graphs from `in` when no
/// input path is given.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace nulab::cli
