#include "zfree/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "zfree/dirichlet.hpp"
#include "zfree/error.hpp"
#include "zfree/factorisatio.hpp"
#include "zfree/family_dz.hpp"
#include "zfree/hardy_ramanujan.hpp"
#include "zfree/series_eval.hpp"

namespace zfree::cli {

namespace {

struct Context {
  std::uint64_t limit;
  std::uint64_t seed;
  const SieveTables& sieve;
  const FactorisationTables& tables;
};

class Recorder {
 public:
  Recorder(std::string suite, std::vector<CheckResult>& out) : suite_(std::move(suite)), out_(out) {}

  void add(const std::string& name, bool passed, const std::string& detail = {}) {
    out_.push_back({suite_, name, passed, detail});
  }

  // Counts failures of `check` over n in [from, to].
  void for_all(const std::string& name, std::uint64_t from, std::uint64_t to,
               const std::function<bool(std::uint64_t)>& check) {
    std::uint64_t failures = 0;
    std::uint64_t first = 0;
    for (std::uint64_t n = from; n <= to; ++n) {
      if (!check(n)) {
        if (failures++ == 0) first = n;
      }
    }
    std::ostringstream d;
    d << "n in [" << from << ", " << to << "]: " << failures << " failures";
    if (failures) d << " (first at n = " << first << ")";
    add(name, failures == 0, d.str());
  }

 private:
  std::string suite_;
  std::vector<CheckResult>& out_;
};

Complex random_disk(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

void arith_suite(const Context& c, std::vector<CheckResult>& out) {
  Recorder r("arith", out);
  const auto& s = c.sieve;
  std::vector<int> divisor_sums(c.limit + 1, 0);
  for (std::uint64_t d = 1; d <= c.limit; ++d) {
    for (std::uint64_t n = d; n <= c.limit; n += d) divisor_sums[n] += s.mu(d);
  }
  r.for_all("sum of mu over divisors is I", 1, c.limit,
            [&](std::uint64_t n) { return divisor_sums[n] == unit_I(n); });
  r.for_all("factorize reconstructs n", 1, c.limit, [&](std::uint64_t n) {
    std::uint64_t product = 1;
    const FactoredInt fn = factorize(n, s);
    for (const auto& [p, e] : fn.factors()) {
      for (unsigned i = 0; i < e; ++i) product *= p;
    }
    return product == n;
  });
  for (const unsigned kappa : {2u, 3u, 5u}) {
    r.for_all("Omega <= kappa omega on kappa-free n, kappa = " + std::to_string(kappa), 1, c.limit,
              [&](std::uint64_t n) {
                return !is_kappa_free(n, kappa, s) || s.big_omega(n) <= kappa * s.small_omega(n);
              });
  }
}

void factorisatio_suite(const Context& c, std::vector<CheckResult>& out) {
  Recorder r("factorisatio", out);
  const auto& t = c.tables;
  r.for_all("f = I + sum_k f_k and f = f_even + f_odd", 1, c.limit, [&](std::uint64_t n) {
    std::uint64_t total = unit_I(n);
    for (unsigned k = 1; k <= t.max_k(); ++k) total += t.fk(k, n);
    return total == t.f(n) && t.f(n) == t.f_even(n) + t.f_odd(n);
  });
  r.for_all("mu = f_even - f_odd", 1, c.limit,
            [&](std::uint64_t n) { return mu_via_parity(n, t) == c.sieve.mu(n); });

  std::vector<std::uint64_t> bell{1};  // ordered Bell numbers by a(l) = sum_j C(l, j) a(l - j)
  for (unsigned ell = 1; ell <= 15; ++ell) {
    std::uint64_t a = 0;
    for (unsigned j = 1; j <= ell; ++j) {
      a += static_cast<std::uint64_t>(binomial_i64(ell, j)) * bell[ell - j];
    }
    bell.push_back(a);
  }
  r.for_all("squarefree f(n) is the ordered Bell number", 2, c.limit, [&](std::uint64_t n) {
    return c.sieve.mu(n) == 0 || t.f(n) == bell[c.sieve.small_omega(n)];
  });

  const std::uint64_t dl_limit = std::min<std::uint64_t>(c.limit, 3000);
  r.for_all("d_lambda <= bound (equality on squarefree) and sum_lambda d_lambda = f", 2, dl_limit,
            [&](std::uint64_t n) {
              const FactoredInt fn = factorize(n, c.sieve);
              std::uint64_t total = 0;
              bool ok = true;
              for (const auto& lambda : enumerate_partitions(fn.big_omega())) {
                const std::uint64_t d = d_lambda(fn, lambda);
                const BigInt bound = d_lambda_bound(lambda);
                ok = ok && BigInt(d) <= bound && (!fn.is_squarefree() || BigInt(d) == bound);
                total += d;
              }
              return ok && total == t.f(n);
            });
}

void dirichlet_suite(const Context& c, std::vector<CheckResult>& out) {
  Recorder r("dirichlet", out);
  const auto inv = dirichlet_inverse(ones_fn<std::int64_t>(c.limit));
  r.for_all("inverse of 1 is mu (exact)", 1, c.limit,
            [&](std::uint64_t n) { return inv(n) == c.sieve.mu(n); });

  const std::uint64_t alt_limit = std::min<std::uint64_t>(c.limit, 2000);
  const auto alt = inverse_via_alternating(ones_fn<std::int64_t>(alt_limit));
  r.for_all("alternating-sum inverse of 1 is mu (exact)", 1, alt_limit,
            [&](std::uint64_t n) { return alt(n) == c.sieve.mu(n); });

  std::mt19937_64 rng(c.seed);
  const std::uint64_t n_rand = std::min<std::uint64_t>(c.limit, 2000);
  double worst_round_trip = 0.0;
  double worst_alt = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    ArithFn f(n_rand);
    f.set(1, 1.0);
    for (std::uint64_t n = 2; n <= n_rand; ++n) f.set(n, random_disk(rng));
    const ArithFn finv = dirichlet_inverse(f);
    const double scale = std::max(1.0, max_abs(finv));
    const ArithFn h = convolve(f, finv);
    for (std::uint64_t n = 1; n <= n_rand; ++n) {
      worst_round_trip = std::max(worst_round_trip, std::abs(h(n) - Complex(unit_I(n))) / scale);
    }
    if (trial == 0) {
      const std::uint64_t small = std::min<std::uint64_t>(n_rand, 500);
      const ArithFn head(small, [&](std::uint64_t n) { return f(n); });
      const ArithFn a = inverse_via_alternating(head);
      for (std::uint64_t n = 1; n <= small; ++n) {
        worst_alt = std::max(worst_alt, std::abs(a(n) - finv(n)) / std::max(1.0, std::abs(finv(n))));
      }
    }
  }
  r.add("F * inverse(F) = I for random bounded F", worst_round_trip <= 1e-9,
        "max relative residual " + fmt(worst_round_trip));
  r.add("alternating-sum inverse matches recurrence for random F", worst_alt <= 1e-9,
        "max relative difference " + fmt(worst_alt));

  const std::uint64_t n_cm = std::min<std::uint64_t>(c.limit, 5000);
  double worst_cm = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    ArithFn f(n_cm);
    f.set(1, 1.0);
    for (std::uint64_t n = 2; n <= n_cm; ++n) {
      const std::uint64_t p = c.sieve.spf(n);
      f.set(n, p == n ? random_disk(rng) : f(p) * f(n / p));
    }
    const ArithFn finv = dirichlet_inverse(f);
    const double scale = std::max(1.0, max_abs(finv));
    for (std::uint64_t n = 1; n <= n_cm; ++n) {
      const Complex expected = f(n) * static_cast<double>(c.sieve.mu(n));
      worst_cm = std::max(worst_cm, std::abs(finv(n) - expected) / scale);
    }
  }
  r.add("completely multiplicative F: inverse = F mu, squarefree support", worst_cm <= 1e-9,
        "max relative deviation " + fmt(worst_cm));
}

void hardy_ramanujan_suite(const Context& c, std::vector<CheckResult>& out) {
  Recorder r("hardy-ramanujan", out);
  for (const unsigned kappa : {2u, 3u, 5u}) {
    const CountingProfile profile = kappa_profile(c.limit, kappa, c.sieve);
    std::uint64_t kappa_free = 0;
    for (std::uint64_t n = 1; n <= c.limit; ++n) kappa_free += is_kappa_free(n, kappa, c.sieve);
    r.add("sum_l N_{kappa,l} counts kappa-free n, kappa = " + std::to_string(kappa),
          profile.total() == kappa_free);
    r.for_all("psi tuple reconstructs n, kappa = " + std::to_string(kappa), 2, c.limit,
              [&](std::uint64_t n) {
                if (!is_kappa_free(n, kappa, c.sieve)) return true;
                const PsiTuple psi = psi_tuple(n, kappa, c.sieve);
                std::uint64_t product = 1;
                for (std::size_t i = 0; i < psi.indices.size(); ++i) {
                  if (i > 0 && psi.indices[i - 1] >= psi.indices[i]) return false;
                  product *= tilde_p(psi.indices[i], kappa, c.sieve);
                }
                return product == n && psi.J == psi.indices.back();
              });
  }
  std::vector<std::uint64_t> checkpoints;
  for (std::uint64_t x = 100; x <= c.limit; x *= 10) checkpoints.push_back(x);
  if (!checkpoints.empty()) {
    const double prime_sum_x = std::min(1e8, static_cast<double>(c.limit) * c.limit);
    const LemmaConstantsFit fit = fit_lemma_constants(checkpoints, {2, 3}, prime_sum_x, c.sieve);
    r.add("kappa-free Hardy-Ramanujan bound under fitted constants", fit.worst_ratio <= 1.0,
          "fitted C1 = " + fmt(fit.c1) + ", C2 = " + fmt(fit.c2));
  }
}

void family_suite(const Context& c, std::vector<CheckResult>& out) {
  Recorder r("family-dz", out);
  unsigned failures = 0;
  for (unsigned alpha = 1; alpha <= 12; ++alpha) {
    for (unsigned k = 0; k <= alpha; ++k) {
      for (unsigned ell = 1; ell <= 12; ++ell) failures += !binomial_identity_check(alpha, k, ell);
    }
  }
  r.add("binomial identity, alpha, l <= 12", failures == 0,
        std::to_string(failures) + " failures");

  std::mt19937_64 rng(c.seed ^ 0x5bd1e995ULL);
  std::vector<Complex> zs{Complex(-1.0), Complex(1.0), Complex(2.0), Complex(0.0, 1.0),
                          Complex(2.0, -3.0)};
  for (int i = 0; i < 3; ++i) zs.push_back(3.0 * random_disk(rng));

  const std::uint64_t n_max = std::min<std::uint64_t>(50, c.limit / 625);
  double worst_closed = 0.0;
  double worst_sum = 0.0;
  double worst_gz = 0.0;
  for (const Complex z : zs) {
    const ZFamily fam = build_context(z, c.limit, c.sieve);
    for (const std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
      std::uint64_t pa = 1;
      for (unsigned alpha = 1; alpha <= 4; ++alpha) {
        pa *= p;
        for (std::uint64_t n = 1; n <= n_max; ++n) {
          if (n % p == 0) continue;
          const Complex closed = prime_power_closed_form(z, alpha, factorize(n, c.sieve), p, c.tables);
          const Complex direct = fam.fz_tilde(pa * n);
          worst_closed = std::max(worst_closed, std::abs(closed - direct) / std::max(1.0, std::abs(direct)));
        }
      }
    }
    for (std::uint64_t n = 2; n <= c.limit; ++n) {
      Complex expected{};
      Complex zk = z;
      for (unsigned k = 1; k <= c.sieve.big_omega(n); ++k, zk *= z) {
        expected += zk * static_cast<double>(c.tables.fk(k, n));
      }
      worst_sum = std::max(worst_sum, std::abs(fam.fz_tilde(n) - expected) /
                                          std::max(1.0, std::abs(expected)));
      if (c.sieve.mu(n) != 0) {
        worst_gz = std::max(worst_gz, std::abs(fam.gz(n) + z) / std::max(1.0, std::abs(z)));
      }
    }
  }
  r.add("prime-power closed form matches direct inversion", worst_closed <= 1e-9,
        "max relative difference " + fmt(worst_closed) + ", n <= " + std::to_string(n_max));
  r.add("inverse of F_z equals sum_k z^k f_k", worst_sum <= 1e-9,
        "max relative difference " + fmt(worst_sum));
  r.add("G_z(n) = -z on squarefree n > 1", worst_gz <= 1e-9,
        "max relative difference " + fmt(worst_gz));

  bool witness_ok = true;
  for (const Complex z : {Complex(0.0), Complex(-1.0), Complex(1.0), Complex(2.0, 1.0)}) {
    const auto w = non_multiplicativity_witness(build_context(z, 6, c.sieve));
    const bool zero = std::abs(w.discrepancy) < 1e-12;
    witness_ok = witness_ok && (zero == (z == Complex(0.0) || z == Complex(-1.0)));
  }
  r.add("G_z multiplicative only for z = 0, -1", witness_ok);
}

void series_suite(const Context& c, std::vector<CheckResult>& out) {
  Recorder r("series-eval", out);
  const ZetaReal z2 = zeta_real(2.0);
  r.add("zeta(2) = pi^2/6", std::abs(z2.value - std::numbers::pi * std::numbers::pi / 6) <= 1e-12);
  const double beta = kalmar_beta();
  const double residual = std::abs(zeta_real(beta).value - 2.0);
  r.add("zeta(beta) = 2", residual <= 1e-12, "beta = " + std::to_string(beta));
  r.add("Kalmar leading constant positive", kalmar_constant() > 0.0);
  const KalmarPoint k = kalmar_ratio(c.limit, c.tables);
  r.add("Kalmar ratio positive", k.ratio > 0.0, "ratio at " + std::to_string(c.limit) + " = " + fmt(k.ratio));
  const SarnakPoint sp = sarnak_correlation(c.limit, SarnakSelector::kF, c.sieve, c.tables);
  r.add("Sarnak ratio below one", std::abs(sp.ratio) < 1.0, "ratio = " + fmt(sp.ratio));
}

using Suite = void (*)(const Context&, std::vector<CheckResult>&);

const std::vector<std::pair<std::string, Suite>>& suite_table() {
  static const std::vector<std::pair<std::string, Suite>> table{
      {"arith", arith_suite},           {"factorisatio", factorisatio_suite},
      {"dirichlet", dirichlet_suite},   {"hardy-ramanujan", hardy_ramanujan_suite},
      {"family-dz", family_suite},      {"series-eval", series_suite}};
  return table;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suite_table()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_verify(const std::string& suite, std::uint64_t limit,
                                    std::uint64_t seed) {
  if (limit < 10) throw DomainError("verify needs --limit >= 10");
  const auto& names = verify_suites();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw DomainError("unknown suite '" + suite + "'");
  }
  const SieveTables sieve = build_sieve(limit);
  const FactorisationTables tables = build_factorisation_tables(sieve, limit);
  const Context ctx{limit, seed, sieve, tables};
  std::vector<CheckResult> results;
  for (const auto& [name, fn] : suite_table()) {
    if (suite == "all" || suite == name) fn(ctx, results);
  }
  return results;
}

}  // namespace zfree::cli
