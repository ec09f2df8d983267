#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bicolor::cli {

/// Exit codes shared by every verb.
inline constexpr int exit_ok = 0;
inline constexpr int exit_violations = 1;
inline constexpr int exit_malformed = 2;

/// Runs one command line (without the program name). Rendered output goes to
/// `out` unless --output names a file; diagnostics and usage go to `err`.
/// Never throws.
int dispatch(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace bicolor::cli
