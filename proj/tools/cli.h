#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitBudget = 3;

/// Runs one command. `args` excludes the program name; "-" as an input path
/// reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ddom::cli
