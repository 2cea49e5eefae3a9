#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lieord::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). JSON goes to `out`, a
/// human-readable summary to `err`. Returns 0, 1 (a verify suite failed) or 2
/// (bad usage or input the library rejected).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieord::cli
