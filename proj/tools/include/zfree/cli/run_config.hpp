#ifndef ZFREE_CLI_RUN_CONFIG_HPP
#define ZFREE_CLI_RUN_CONFIG_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace zfree::cli {

enum class OutputFormat { kCsv, kJson };

/// Shared settings for the experiment-style subcommands (verify, reproduce).
/// A fixed seed makes every output byte-identical across runs.
struct RunConfig {
  std::uint64_t sieve_limit = 1'000'000;
  std::vector<unsigned> kappas{2, 3};
  std::vector<std::complex<double>> zs{{1.0, 0.0}, {2.0, 0.0}, {-3.0, 0.0}, {0.0, 1.0}, {2.0, -3.0}};
  std::vector<std::uint64_t> checkpoints{100, 1'000, 10'000, 100'000, 1'000'000};
  std::string output_dir;  // empty: report to stdout only
  OutputFormat format = OutputFormat::kJson;
  std::uint64_t seed = 20240611;

  /// Throws zfree::DomainError on N < 2, unsorted checkpoints, checkpoints
  /// beyond N, or kappa < 2.
  void validate() const;

  [[nodiscard]] nlohmann::json to_json() const;
  [[nodiscard]] static RunConfig from_json(const nlohmann::json& j);
  [[nodiscard]] static RunConfig load(const std::string& path);
};

/// "RE" or "RE,IM".
[[nodiscard]] std::complex<double> parse_complex(const std::string& text);
[[nodiscard]] OutputFormat parse_format(const std::string& text);

}  // namespace zfree::cli

#endif  // ZFREE_CLI_RUN_CONFIG_HPP
