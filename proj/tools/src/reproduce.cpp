#include "zfree/cli/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "zfree/dirichlet.hpp"
#include "zfree/factorisatio.hpp"
#include "zfree/family_dz.hpp"
#include "zfree/hardy_ramanujan.hpp"
#include "zfree/series_eval.hpp"

namespace zfree::cli {

namespace {

using nlohmann::json;

Complex random_disk(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json psi_section(const SieveTables& sieve) {
  const PsiTuple psi = psi_tuple(4400, 5, sieve);
  return {{"n", 4400}, {"kappa", 5}, {"indices", psi.indices}, {"J", psi.J}};
}

json beta_section() {
  const double beta = kalmar_beta();
  const ZetaReal z = zeta_real(beta);
  return {{"beta", beta},
          {"residual", std::abs(z.value - 2.0)},
          {"zeta_prime_at_beta", z.derivative},
          {"leading_constant", kalmar_constant()}};
}

// Random completely multiplicative F: the inverse must be F mu.
json support_section(const SieveTables& sieve, std::uint64_t seed) {
  const std::uint64_t limit = std::min<std::uint64_t>(5000, sieve.limit());
  std::mt19937_64 rng(seed);
  const int trials = 200;
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    ArithFn f(limit);
    f.set(1, 1.0);
    for (std::uint64_t n = 2; n <= limit; ++n) {
      const std::uint64_t p = sieve.spf(n);
      f.set(n, p == n ? random_disk(rng) : f(p) * f(n / p));
    }
    const ArithFn inv = dirichlet_inverse(f);
    const double scale = std::max(1.0, max_abs(inv));
    for (std::uint64_t n = 1; n <= limit; ++n) {
      worst = std::max(worst, std::abs(inv(n) - f(n) * static_cast<double>(sieve.mu(n))) / scale);
    }
  }
  return {{"limit", limit},
          {"trials", trials},
          {"max_relative_deviation", worst},
          {"pass", worst <= 1e-9}};
}

json closed_form_section(const RunConfig& config, const SieveTables& sieve,
                         const FactorisationTables& tables) {
  const std::uint64_t limit = std::min<std::uint64_t>(625 * 50, sieve.limit());
  const std::uint64_t n_max = limit / 625;
  json rows = json::array();
  bool all_pass = true;
  for (const Complex z : config.zs) {
    const ZFamily fam = build_context(z, limit, sieve);
    double worst = 0.0;
    for (const std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
      std::uint64_t pa = 1;
      for (unsigned alpha = 1; alpha <= 4; ++alpha) {
        pa *= p;
        for (std::uint64_t n = 1; n <= n_max; ++n) {
          if (n % p == 0) continue;
          const Complex direct = fam.fz_tilde(pa * n);
          const Complex closed = prime_power_closed_form(z, alpha, factorize(n, sieve), p, tables);
          worst = std::max(worst, std::abs(closed - direct) / std::max(1.0, std::abs(direct)));
        }
      }
    }
    all_pass = all_pass && worst <= 1e-9;
    rows.push_back({{"z", complex_json(z)}, {"max_relative_difference", worst}});
  }
  return {{"primes", {2, 3, 5}}, {"max_alpha", 4}, {"max_n", n_max}, {"per_z", rows},
          {"pass", all_pass}};
}

json parity_section(const SieveTables& sieve, const FactorisationTables& tables) {
  std::uint64_t mismatches = 0;
  for (std::uint64_t n = 1; n <= tables.limit(); ++n) mismatches += mu_via_parity(n, tables) != sieve.mu(n);
  return {{"limit", tables.limit()}, {"mismatches", mismatches}, {"pass", mismatches == 0}};
}

json kalmar_section(const RunConfig& config, const FactorisationTables& tables) {
  json rows = json::array();
  for (const auto x : config.checkpoints) {
    const KalmarPoint k = kalmar_ratio(x, tables);
    rows.push_back({{"x", x},
                    {"sum_f", k.sum},
                    {"predicted", k.predicted},
                    {"ratio", k.ratio},
                    {"log_exponent", k.log_exponent}});
  }
  return rows;
}

json sarnak_section(const RunConfig& config, const SieveTables& sieve,
                    const FactorisationTables& tables) {
  json out;
  for (const auto xi : {SarnakSelector::kF, SarnakSelector::kFMu2}) {
    json rows = json::array();
    for (const auto x : config.checkpoints) {
      const SarnakPoint p = sarnak_correlation(x, xi, sieve, tables);
      rows.push_back({{"x", x},
                      {"numerator", p.numerator},
                      {"denominator", p.denominator},
                      {"ratio", p.ratio}});
    }
    out[to_string(xi)] = rows;
  }
  return out;
}

json coffeeshop_section(const RunConfig& config, const SieveTables& sieve,
                        const FactorisationTables& tables) {
  json out = json::array();
  for (const unsigned kappa : config.kappas) {
    for (const double c : {1.0, 2.0}) {
      json rows = json::array();
      for (const auto x : config.checkpoints) {
        const CoffeeshopSum s = coffeeshop_sum(x, c, kappa, sieve, tables);
        rows.push_back({{"x", x},
                        {"value", static_cast<double>(s.value)},
                        {"exponent", s.exponent}});
      }
      out.push_back({{"kappa", kappa}, {"c", c}, {"rows", rows}});
    }
  }
  return out;
}

json fitted_section(const RunConfig& config, const SieveTables& sieve,
                    const FactorisationTables& tables) {
  const double prime_sum_x = std::min(1e8, static_cast<double>(sieve.limit()) * sieve.limit());
  const PrimeSumFit ps = fit_prime_sum_constant(prime_sum_x, sieve);
  const LemmaConstantsFit lemma = fit_lemma_constants(config.checkpoints, config.kappas,
                                                      prime_sum_x, sieve);
  const GrowthFit growth = fit_factorisation_growth(sieve, tables);

  json tilde = json::array();
  const std::uint64_t tilde_limit = std::min<std::uint64_t>(100'000, sieve.limit());
  for (const Complex z : config.zs) {
    const TildeGrowthFit fit = fit_tilde_growth(build_context(z, tilde_limit, sieve));
    tilde.push_back({{"z", complex_json(z)},
                     {"exponent", fit.exponent},
                     {"c", fit.constant},
                     {"argmax", fit.argmax}});
  }
  return {{"label", "fitted"},
          {"hardy_ramanujan",
           {{"C1", lemma.c1},
            {"C2", lemma.c2},
            {"worst_ratio", lemma.worst_ratio},
            {"prime_sum_C2_supremum", ps.c2},
            {"prime_sum_x_max", prime_sum_x}}},
          {"factorisation_growth", {{"c", growth.constant}, {"argmax", growth.argmax}}},
          {"inverse_growth", {{"limit", tilde_limit}, {"per_z", tilde}}}};
}

}  // namespace

nlohmann::json reproduce_report(const RunConfig& config) {
  config.validate();
  const SieveTables sieve = build_sieve(config.sieve_limit);
  const FactorisationTables tables = build_factorisation_tables(sieve, config.sieve_limit, 0);
  const FactorisationTables small = build_factorisation_tables(sieve, std::min<std::uint64_t>(
                                                                          config.sieve_limit, 5000));
  json report;
  report["config"] = config.to_json();
  report["checks"] = {{"psi_4400", psi_section(sieve)},
                      {"kalmar_beta", beta_section()},
                      {"completely_multiplicative_support", support_section(sieve, config.seed)},
                      {"prime_power_closed_form", closed_form_section(config, sieve, small)},
                      {"mu_parity", parity_section(sieve, tables)}};
  report["measurements"] = {{"kalmar", kalmar_section(config, tables)},
                            {"sarnak", sarnak_section(config, sieve, tables)},
                            {"coffeeshop", coffeeshop_section(config, sieve, tables)}};
  report["fitted"] = fitted_section(config, sieve, tables);
  return report;
}

}  // namespace zfree::cli
