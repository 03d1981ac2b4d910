#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error, 3 resource cap exceeded.

#include <ostream>
#include <string>
#include <vector>

namespace stabkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Inclusive range "a..b" or a single value "a". Throws InvalidArgument.
std::vector<unsigned> parse_range(const std::string& text);

}  // namespace stabkit::cli
