#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regzeta {

inline constexpr const char* kToolVersion = "regzeta 1.0.0";

/// Runs the command line given as args (without the program name), writing
/// the envelope to out and diagnostics to err.
/// Exit codes: 0 success, 1 verification failure, 2 usage error,
/// 3 analytic refusal (divergent or unbounded request).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace regzeta
