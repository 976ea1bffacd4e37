#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace corelate {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnexpected = 1;  // unexpected verdict or internal failure
inline constexpr int kExitUser = 2;        // parse, type or usage error
inline constexpr int kExitUnequal = 3;     // `equal` on distinct terms

/// Runs the `corelate` command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace corelate
