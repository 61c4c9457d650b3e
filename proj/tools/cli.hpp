#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hornup::cli {

enum ExitCode : int { ok = 0, usage = 1, parse_error = 2, verification_failure = 3 };

/// Runs one `hornup` invocation; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hornup::cli
