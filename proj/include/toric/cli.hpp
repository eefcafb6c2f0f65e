#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric::cli {

/// Exit codes of the command-line interface.
inline constexpr int kExitOk = 0;            // success / verified
inline constexpr int kExitVerifyFailed = 1;  // verification failure or empty search
inline constexpr int kExitUsage = 2;         // usage error
inline constexpr int kExitResource = 3;      // resource-guard error

/// Parse and run one invocation. `args` excludes the program name.
/// Machine-readable results go to `out`, human-readable diagnostics to
/// `err`. Never throws; all errors are mapped onto exit codes.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
