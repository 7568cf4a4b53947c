#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace collin {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs the command line (args[0] is the program name). Machine output goes
/// to `out`, diagnostics to `err`. Returns 0 on success, 1 on a usage error,
/// 2 when the input data or configuration is rejected.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace collin
