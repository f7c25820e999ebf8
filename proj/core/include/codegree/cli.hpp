#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace codegree {

/// Runs one CLI invocation (args exclude the program name). Exit code
/// contract: 0 success/pass, 1 mathematical check failure, 2 usage or
/// configuration error. Reports go to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace codegree
