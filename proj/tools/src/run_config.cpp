#include "zfree/cli/run_config.hpp"

#include <algorithm>
#include <fstream>

#include "zfree/error.hpp"

namespace zfree::cli {

void RunConfig::validate() const {
  if (sieve_limit < 2) throw DomainError("run config: sieve limit must be >= 2");
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end())) {
    throw DomainError("run config: checkpoints must be sorted ascending");
  }
  if (!checkpoints.empty() && checkpoints.back() > sieve_limit) {
    throw DomainError("run config: checkpoint beyond the sieve limit");
  }
  if (!checkpoints.empty() && checkpoints.front() < 2) {
    throw DomainError("run config: checkpoints must be >= 2");
  }
  for (const unsigned k : kappas) {
    if (k < 2) throw DomainError("run config: kappa must be >= 2");
  }
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json zj = nlohmann::json::array();
  for (const auto& z : zs) zj.push_back({z.real(), z.imag()});
  return {{"sieve_limit", sieve_limit},
          {"kappas", kappas},
          {"zs", zj},
          {"checkpoints", checkpoints},
          {"output_dir", output_dir},
          {"format", format == OutputFormat::kCsv ? "csv" : "json"},
          {"seed", seed}};
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig c;
  try {
    if (j.contains("sieve_limit")) c.sieve_limit = j.at("sieve_limit").get<std::uint64_t>();
    if (j.contains("kappas")) c.kappas = j.at("kappas").get<std::vector<unsigned>>();
    if (j.contains("zs")) {
      c.zs.clear();
      for (const auto& z : j.at("zs")) {
        if (z.is_number()) {
          c.zs.emplace_back(z.get<double>(), 0.0);
        } else {
          c.zs.emplace_back(z.at(0).get<double>(), z.size() > 1 ? z.at(1).get<double>() : 0.0);
        }
      }
    }
    if (j.contains("checkpoints")) {
      c.checkpoints = j.at("checkpoints").get<std::vector<std::uint64_t>>();
    }
    if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
    if (j.contains("format")) c.format = parse_format(j.at("format").get<std::string>());
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("run config: ") + e.what());
  }
  c.validate();
  return c;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("config file " + path + ": " + e.what());
  }
  return from_json(j);
}

std::complex<double> parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    const std::string re_text = text.substr(0, comma);
    const double re = std::stod(re_text, &used);
    if (used != re_text.size()) throw std::invalid_argument(text);
    double im = 0.0;
    if (comma != std::string::npos) {
      const std::string im_text = text.substr(comma + 1);
      im = std::stod(im_text, &used);
      if (used != im_text.size()) throw std::invalid_argument(text);
    }
    return {re, im};
  } catch (const std::logic_error&) {
    throw DomainError("cannot parse complex number '" + text + "' (expected RE or RE,IM)");
  }
}

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw DomainError("unknown format '" + text + "' (expected csv or json)");
}

}  // namespace zfree::cli
