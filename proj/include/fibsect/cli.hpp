#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibsect::cli {

inline constexpr const char* kVersion = "0.1.0";

// Runs one CLI invocation. args excludes the program name. Data goes to
// out, diagnostics to err. Returns the process exit status:
//   0  success
//   1  verification failure (a verify suite found a failing case)
//   2  usage error (unknown flag, non-integer argument, d <= 0, ...)
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibsect::cli
