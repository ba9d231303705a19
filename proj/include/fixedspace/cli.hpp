#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fixedspace {

/// Batch command-line surface. Returns 0 on success, 1 on validation or
/// usage errors, 2 when a verification subcommand finds a mismatch.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fixedspace
