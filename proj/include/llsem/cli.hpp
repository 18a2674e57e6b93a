#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace llsem {

/// Runs the command line `args` (args[0] is the program name). Machine
/// output goes to `out`, diagnostics to `err`; "-" as a file reads `in`.
/// Returns 0 on success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace llsem
