#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wld::cli {

enum ExitCode : int { ok = 0, domain_error = 1, usage_error = 2 };

/// Runs the wld command line (arguments exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wld::cli
