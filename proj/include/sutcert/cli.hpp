#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sutcert {

enum ExitCode : int {
  kExitCertified = 0,
  kExitNotCertified = 1,
  kExitInputError = 2,
  kExitInconclusive = 3,
  kExitResource = 4,
};

// Runs one command; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sutcert
