#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sncalc::cli {

// Runs one CLI invocation. `args` excludes the program name. Returns 0 on
// success, 1 on domain errors (size mismatches, precondition failures), 2 on
// parse errors. Results go to `out`, diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sncalc::cli
