#ifndef ZFREE_CLI_VERIFY_HPP
#define ZFREE_CLI_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace zfree::cli {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Suite names accepted by run_verify besides "all".
[[nodiscard]] const std::vector<std::string>& verify_suites();

/// Runs the invariant checks of one suite (or every suite for "all") at
/// scale `limit`, with randomized inputs drawn from `seed`. Throws
/// zfree::DomainError for an unknown suite.
[[nodiscard]] std::vector<CheckResult> run_verify(const std::string& suite, std::uint64_t limit,
                                                  std::uint64_t seed);

}  // namespace zfree::cli

#endif  // ZFREE_CLI_VERIFY_HPP
