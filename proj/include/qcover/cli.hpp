#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcover {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInvariant = 4;

// Runs one command. `args` excludes the program name. Returns the process
// exit status: 0 success, 2 usage or input error, 3 budget refused,
// 4 invariant breach or verification mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcover
