#include "zfree/hardy_ramanujan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "zfree/error.hpp"

namespace zfree {

std::uint64_t CountingProfile::total() const {
  return std::accumulate(per_ell.begin(), per_ell.end(), std::uint64_t{0});
}

namespace {

void require_x(std::uint64_t x, const SieveTables& sieve) {
  if (x == 0 || x > sieve.limit()) {
    throw RangeError("x = " + std::to_string(x) + " outside sieve range 1.." +
                     std::to_string(sieve.limit()));
  }
}

template <class Bucket>
CountingProfile build_profile(ProfileKind kind, std::uint64_t x, unsigned kappa,
                              const SieveTables& sieve, Bucket bucket) {
  require_x(x, sieve);
  CountingProfile p{kind, x, kappa, {}};
  for (std::uint64_t n = 1; n <= x; ++n) {
    const int ell = bucket(n);
    if (ell < 0) continue;
    if (static_cast<std::size_t>(ell) >= p.per_ell.size()) p.per_ell.resize(ell + 1, 0);
    ++p.per_ell[ell];
  }
  return p;
}

}  // namespace

CountingProfile omega_profile(std::uint64_t x, const SieveTables& sieve) {
  return build_profile(ProfileKind::kSmallOmega, x, 0, sieve,
                       [&](std::uint64_t n) { return static_cast<int>(sieve.small_omega(n)); });
}

CountingProfile big_omega_profile(std::uint64_t x, const SieveTables& sieve) {
  return build_profile(ProfileKind::kBigOmega, x, 0, sieve,
                       [&](std::uint64_t n) { return static_cast<int>(sieve.big_omega(n)); });
}

CountingProfile kappa_profile(std::uint64_t x, unsigned kappa, const SieveTables& sieve) {
  if (kappa < 2) throw DomainError("kappa must be >= 2");
  return build_profile(ProfileKind::kKappaFree, x, kappa, sieve, [&](std::uint64_t n) {
    return sieve.max_exponent(n) < kappa ? static_cast<int>(sieve.big_omega(n)) : -1;
  });
}

std::uint64_t count_omega(std::uint64_t x, unsigned ell, const SieveTables& sieve) {
  return omega_profile(x, sieve).at(ell);
}

std::uint64_t count_bigomega(std::uint64_t x, unsigned ell, const SieveTables& sieve) {
  return big_omega_profile(x, sieve).at(ell);
}

std::uint64_t N_kappa_ell(std::uint64_t x, unsigned kappa, unsigned ell,
                          const SieveTables& sieve) {
  return kappa_profile(x, kappa, sieve).at(ell);
}

std::uint64_t tilde_p(std::uint64_t j, unsigned kappa, const SieveTables& sieve) {
  if (kappa < 2) throw DomainError("kappa must be >= 2");
  if (j == 0) throw DomainError("tilde_p index must be >= 1");
  const std::uint64_t block = kappa - 1;
  return sieve.nth_prime((j + block - 1) / block);
}

PsiTuple psi_tuple(std::uint64_t n, unsigned kappa, const SieveTables& sieve) {
  if (kappa < 2) throw DomainError("kappa must be >= 2");
  const FactoredInt fn = factorize(n, sieve);
  if (!fn.is_kappa_free(kappa)) {
    throw DomainError(std::to_string(n) + " is not " + std::to_string(kappa) + "-free");
  }
  const std::uint64_t block = kappa - 1;
  PsiTuple psi;
  for (const auto& [p, e] : fn.factors()) {
    const std::uint64_t first = (sieve.prime_pi(p) - 1) * block + 1;
    for (unsigned i = 0; i < e; ++i) psi.indices.push_back(first + i);
  }
  psi.J = psi.indices.empty() ? 0 : psi.indices.back();
  return psi;
}

double lemma_bound_rhs(double x, unsigned kappa, unsigned ell, double c1, double c2) {
  if (x < 2.0) throw DomainError("lemma bound needs x >= 2");
  if (kappa < 2 || ell < 1) throw DomainError("lemma bound needs kappa >= 2 and l >= 1");
  const double k1 = kappa - 1;
  const double base = k1 * iterated_log(x, 2) + k1 * c2;
  return c1 * x / std::log(x) * std::pow(base, ell - 1) / std::tgamma(ell);
}

LemmaBoundReport check_lemma_bound(std::uint64_t x, unsigned kappa, unsigned ell, double c1,
                                   double c2, const SieveTables& sieve) {
  LemmaBoundReport r;
  r.x = static_cast<double>(x);
  r.kappa = kappa;
  r.ell = ell;
  r.lhs = N_kappa_ell(x, kappa, ell, sieve);
  r.rhs = lemma_bound_rhs(r.x, kappa, ell, c1, c2);
  r.ratio = static_cast<double>(r.lhs) / r.rhs;
  r.pass = r.ratio <= 1.0;
  return r;
}

double prime_reciprocal_log_sum(double x, const SieveTables& sieve) {
  double total = 0.0;
  for (const std::uint32_t p : sieve.primes()) {
    const double pd = p;
    if (pd * pd >= x) return total;
    total += 1.0 / (pd * std::log(x / pd));
  }
  if (static_cast<double>(sieve.limit()) * sieve.limit() < x) {
    throw RangeError("prime_reciprocal_log_sum: sieve does not reach sqrt(x)");
  }
  return total;
}

PrimeSumFit fit_prime_sum_constant(double x_max, const SieveTables& sieve) {
  if (x_max < 2.0) throw DomainError("x_max must be >= 2");
  if (static_cast<double>(sieve.limit()) * sieve.limit() < x_max) {
    throw RangeError("fit_prime_sum_constant: sieve does not reach sqrt(x_max)");
  }
  // on [2, 4] the sum is empty and the expression is -log_2 x <= -1
  PrimeSumFit fit{-iterated_log(2.0, 2), 2.0};
  const auto primes = sieve.primes();
  for (std::size_t k = 0; k < primes.size(); ++k) {
    const double x = static_cast<double>(primes[k]) * primes[k];
    if (x >= x_max) break;
    double sum = 0.0;
    for (std::size_t i = 0; i <= k; ++i) {
      const double p = primes[i];
      sum += 1.0 / (p * std::log(x / p));
    }
    const double g = std::log(x) * sum - iterated_log(x, 2);
    if (g > fit.c2) fit = {g, x};
  }
  return fit;
}

namespace {

double round_up(double v, double resolution) {
  double r = std::ceil(v / resolution) * resolution;
  if (r <= v) r += resolution;
  return r;
}

}  // namespace

LemmaConstantsFit fit_lemma_constants(const std::vector<std::uint64_t>& checkpoints,
                                      const std::vector<unsigned>& kappas,
                                      double prime_sum_x_max, const SieveTables& sieve,
                                      double resolution) {
  LemmaConstantsFit fit;
  fit.c2 = round_up(fit_prime_sum_constant(prime_sum_x_max, sieve).c2, resolution);

  struct Point {
    double x;
    unsigned kappa;
    unsigned ell;
    double count;
  };
  std::vector<Point> points;
  for (const unsigned kappa : kappas) {
    for (const std::uint64_t x : checkpoints) {
      const CountingProfile profile = kappa_profile(x, kappa, sieve);
      for (unsigned ell = 1; ell < profile.per_ell.size(); ++ell) {
        if (profile.per_ell[ell] == 0) continue;
        points.push_back({static_cast<double>(x), kappa, ell,
                          static_cast<double>(profile.per_ell[ell])});
      }
    }
  }

  double c1 = 0.0;
  for (const auto& pt : points) {
    c1 = std::max(c1, pt.count / lemma_bound_rhs(pt.x, pt.kappa, pt.ell, 1.0, fit.c2));
  }
  fit.c1 = round_up(c1, resolution);

  for (const auto& pt : points) {
    const double ratio = pt.count / lemma_bound_rhs(pt.x, pt.kappa, pt.ell, fit.c1, fit.c2);
    if (ratio > fit.worst_ratio) {
      fit.worst_ratio = ratio;
      fit.worst_x = pt.x;
      fit.worst_kappa = pt.kappa;
      fit.worst_ell = pt.ell;
    }
  }
  return fit;
}

CoffeeshopSum coffeeshop_sum(std::uint64_t x, double c, unsigned kappa,
                             const SieveTables& sieve, const FactorisationTables& tables) {
  if (kappa < 2) throw DomainError("kappa must be >= 2");
  if (x < 2 || x > tables.limit()) {
    throw RangeError("coffeeshop_sum: x must lie in 2.." + std::to_string(tables.limit()));
  }
  CoffeeshopSum s;
  s.x = x;
  s.c = c;
  s.kappa = kappa;
  for (std::uint64_t n = 1; n <= x; ++n) {
    if (sieve.max_exponent(n) >= kappa) continue;
    const unsigned ell = sieve.big_omega(n);
    if (ell >= s.f_by_omega.size()) s.f_by_omega.resize(ell + 1, 0);
    s.f_by_omega[ell] = checked_add(s.f_by_omega[ell], tables.f(n), "coffeeshop sum");
  }
  long double total = 0.0L;
  for (std::size_t ell = 0; ell < s.f_by_omega.size(); ++ell) {
    total += std::pow(static_cast<long double>(c), static_cast<long double>(ell)) *
             static_cast<long double>(s.f_by_omega[ell]);
  }
  s.value = total;
  s.exponent = static_cast<double>(std::log(std::fabs(total)) / std::log(static_cast<long double>(x)));
  return s;
}

}  // namespace zfree
