#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scfgrid::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kInternal = 3,  // also: verify found a property violation
  kResource = 4,
};

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scfgrid::cli
