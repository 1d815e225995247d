#ifndef ZFREE_CLI_COMMANDS_HPP
#define ZFREE_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace zfree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // domain/capacity/range errors, failed checks
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Normal output goes
/// to `out`, diagnostics to `err`.
int run_subcommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zfree::cli

#endif  // ZFREE_CLI_COMMANDS_HPP
