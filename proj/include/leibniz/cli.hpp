#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leibniz {

inline constexpr const char* kToolName = "leibniz";
inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one CLI invocation. `args` excludes the program name. A file argument
/// of "-" reads from `in`.
/// Returns 0 when a verdict was computed, 1 on bad input, 2 on an internal
/// consistency failure.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace leibniz
