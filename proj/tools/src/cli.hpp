#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ealab::cli {

/// Exit codes: 0 success, 1 the property asked about is false (not an
/// effect algebra, no state, not isomorphic, ...), 2 usage or input error,
/// 3 internal inconsistency (a bug).
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Runs one command line (args excludes the program name). "-" as a file
/// argument reads `in`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace ealab::cli
