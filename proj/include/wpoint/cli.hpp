#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wpoint {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation. args[0] is the program name. Reports go to out,
/// diagnostics to err. Returns 0 on success, 1 on any engine error or failed
/// check, 2 on usage errors.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wpoint
