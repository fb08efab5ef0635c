#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hardychain {

/// Runs one CLI invocation. `args` excludes the program name. Writes the
/// serialized result to `out` and diagnostics to `err`. Returns 0 on
/// success/pass, 1 on verification failure or computation error, 2 on usage
/// errors.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace hardychain
