#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cubedet/verify.hpp"

namespace cubedet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a verification found a disagreement
inline constexpr int kExitUsage = 2;   // bad arguments or unusable input

/// Runs one command. `args` excludes the program name. A file argument of
/// "-" reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Prints a single-matrix report; returns kExitOk or kExitFailed.
int print_report(std::ostream& out, const VerifyReport& report, bool json);

/// Prints a batch summary; returns kExitOk or kExitFailed.
int print_summary(std::ostream& out, const BatchSummary& summary, bool json);

}  // namespace cubedet::cli
