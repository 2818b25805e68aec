#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylgb::cli {

/// Runs one subcommand; `args` excludes the program name. Returns 0 when all
/// checks pass, 1 on a failed check or computation error, 2 on usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylgb::cli
