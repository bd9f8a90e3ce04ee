#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncd {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `ncd` invocation; `args` excludes the program name.
/// Returns 0 on success, 1 when a check fails, 2 on usage or input errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ncd
