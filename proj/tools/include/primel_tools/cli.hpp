#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace primel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNegativeInSpan = 10;
inline constexpr int kExitNegativeAbsolute = 11;
inline constexpr int kExitNegativeProbabilistic = 12;
inline constexpr int kExitUnknown = 20;

/// Runs one command line (args excludes the program name). Input file "-"
/// or a missing positional reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace primel::cli
