#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spfsym {

/// Runs the command-line surface against explicit argument and stream
/// handles. Exit codes: 0 success, 2 validation error, 3 feasibility bound
/// exceeded, 4 internal verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spfsym
