#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace samelson {

/// Dispatches the command line (without the program name). Exit codes:
/// 0 all checks pass, 1 verification/construction failure, 2 usage or
/// parse error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace samelson
