#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncps {

// Parses and executes one CLI invocation (argv without the program name).
// Returns the process exit code: 0 on success, 1 when verification finds a
// failing property, 2 on usage or input errors. Never throws.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ncps
