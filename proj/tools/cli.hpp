#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace corank::cli {

/// Runs the command line @p args (args[0] is the program name) and returns
/// the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace corank::cli
