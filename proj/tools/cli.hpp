#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boxcert::cli {

// Stable exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 1;
inline constexpr int kInvalid = 2;
inline constexpr int kHypothesisViolated = 3;
inline constexpr int kInternalFailure = 4;
inline constexpr int kNotMember = 5;

/// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The witness-partition table printed by `selftest`; returns the exit code.
int selftest(std::ostream& out);

}  // namespace boxcert::cli
