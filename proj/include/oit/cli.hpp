#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `oit` command line. `args` excludes the program name. Documents
/// and reports go to `out`, diagnostics to `err`. Returns 0 on success, 1 on
/// validation or input failure, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oit
