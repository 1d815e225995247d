#ifndef ZFREE_CLI_REPRODUCE_HPP
#define ZFREE_CLI_REPRODUCE_HPP

#include <json.hpp>

#include "zfree/cli/run_config.hpp"

namespace zfree::cli {

/// One report with every headline experiment. Identities and checks live
/// under "checks"; empirically fitted constants under "fitted", so that
/// measurements are never confused with asserted values. Contains no
/// timings, so a fixed config yields a byte-identical report.
[[nodiscard]] nlohmann::json reproduce_report(const RunConfig& config);

}  // namespace zfree::cli

#endif  // ZFREE_CLI_REPRODUCE_HPP
