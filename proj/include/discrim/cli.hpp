#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace discrim::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kSchemaError = 2,
  kInvariantViolation = 3,
  kUnwritableOutput = 4,
};

/// Runs `discrim <subcommand> ...`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace discrim::cli
