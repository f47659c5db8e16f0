#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rootsum {

/// Runs one CLI invocation; args excludes the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rootsum
