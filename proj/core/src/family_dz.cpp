#include "zfree/family_dz.hpp"

#include <cmath>
#include <string>

#include "zfree/error.hpp"
#include "zfree/series_eval.hpp"

namespace zfree {

namespace {

template <class T>
BasicZFamily<T> build_family(T z, std::uint64_t limit, const SieveTables& sieve) {
  if (limit == 0) throw DomainError("family limit must be >= 1");
  if (limit > sieve.limit()) throw RangeError("family limit exceeds sieve limit");
  BasicZFamily<T> fam;
  fam.z = z;
  fam.limit = limit;
  fam.fz = BasicArithFn<T>(limit, [z](std::uint64_t n) { return n == 1 ? T{1} : T{} - z; });
  fam.fz_tilde = dirichlet_inverse(fam.fz);
  fam.gz = dirichlet_inverse(restrict_support(fam.fz_tilde, squarefree_predicate(sieve)));
  fam.beta_z = beta_z(Complex(z));
  return fam;
}

void require_coprime_prime(std::uint64_t p, const FactoredInt& n) {
  if (!is_prime_trial(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (n.divisible_by(p)) {
    throw DomainError("p = " + std::to_string(p) + " divides n = " + std::to_string(n.value()));
  }
}

// f_l(n) with f_0(n) = I(n).
std::uint64_t f_ell(unsigned ell, const FactoredInt& n, const FactorisationTables& tables) {
  if (ell == 0) return n.value() == 1 ? 1 : 0;
  if (ell > n.big_omega()) return 0;
  return tables.fk(ell, n.value());
}

template <class T>
T power(T base, unsigned e) {
  T r{1};
  for (unsigned i = 0; i < e; ++i) r = ring::mul(r, base);
  return r;
}

}  // namespace

ZFamily build_context(Complex z, std::uint64_t limit, const SieveTables& sieve) {
  return build_family<Complex>(z, limit, sieve);
}

IntZFamily build_exact_context(std::int64_t z, std::uint64_t limit, const SieveTables& sieve) {
  return build_family<std::int64_t>(z, limit, sieve);
}

double beta_z(Complex z) {
  if (z == Complex{}) return -std::numeric_limits<double>::infinity();
  return solve_zeta_equals(1.0 + 1.0 / std::abs(z));
}

Complex B_sum(Complex z, unsigned alpha, unsigned ell) {
  Complex total{};
  Complex zk{1.0};
  for (unsigned k = 0; k <= alpha; ++k) {
    const double coeff = static_cast<double>(binomial_i64(k + ell, ell)) *
                         static_cast<double>(binomial_i64(alpha + ell - 1, k + ell - 1));
    total += zk * coeff;
    zk *= z;
  }
  return total;
}

Complex B_closed(Complex z, unsigned alpha, unsigned ell) {
  if (alpha == 0) throw DomainError("alpha must be >= 1");
  const double lead = static_cast<double>(binomial_i64(alpha + ell - 1, ell));
  const Complex zp1 = z + 1.0;
  return lead * (z * power(zp1, alpha - 1) +
                 (static_cast<double>(ell) / alpha) * power(zp1, alpha));
}

std::int64_t B_sum(std::int64_t z, unsigned alpha, unsigned ell) {
  std::int64_t total = 0;
  std::int64_t zk = 1;
  for (unsigned k = 0; k <= alpha; ++k) {
    const std::int64_t coeff = checked_mul(binomial_i64(k + ell, ell),
                                           binomial_i64(alpha + ell - 1, k + ell - 1), "B_sum");
    total = checked_add(total, checked_mul(zk, coeff, "B_sum"), "B_sum");
    if (k < alpha) zk = checked_mul(zk, z, "B_sum");
  }
  return total;
}

std::int64_t B_closed(std::int64_t z, unsigned alpha, unsigned ell) {
  if (alpha == 0) throw DomainError("alpha must be >= 1");
  const std::int64_t zp1 = checked_add(z, std::int64_t{1});
  const std::int64_t a = checked_mul(checked_mul(binomial_i64(alpha + ell - 1, ell), z),
                                     power(zp1, alpha - 1), "B_closed");
  const std::int64_t b =
      checked_mul(binomial_i64(alpha + ell - 1, alpha), power(zp1, alpha), "B_closed");
  return checked_add(a, b, "B_closed");
}

bool binomial_identity_check(unsigned alpha, unsigned k, unsigned ell) {
  if (alpha == 0 || k > alpha || ell == 0) {
    throw DomainError("binomial identity needs alpha >= 1, 0 <= k <= alpha, l >= 1");
  }
  const std::int64_t a = alpha;
  const std::int64_t kk = k;
  const std::int64_t l = ell;
  const BigRational lhs(binomial(kk + l, l) * binomial(a + l - 1, kk + l - 1));
  const BigRational inner =
      BigRational(binomial(a - 1, kk - 1)) + BigRational(BigInt(l), BigInt(a)) * binomial(a, kk);
  const BigRational rhs = BigRational(binomial(a + l - 1, l)) * inner;
  return lhs == rhs;
}

Complex prime_power_closed_form(Complex z, unsigned alpha, const FactoredInt& n, std::uint64_t p,
                                const FactorisationTables& tables) {
  if (alpha == 0) throw DomainError("alpha must be >= 1");
  require_coprime_prime(p, n);
  const Complex zp1 = z + 1.0;
  Complex total{};
  Complex zl{1.0};
  for (unsigned ell = 0; ell <= n.big_omega(); ++ell) {
    const double fl = static_cast<double>(f_ell(ell, n, tables));
    if (fl != 0.0) {
      const double lead = static_cast<double>(binomial_i64(alpha + ell - 1, ell));
      total += zl * (z + (static_cast<double>(ell) / alpha) * zp1) * lead * fl;
    }
    zl *= z;
  }
  return power(zp1, alpha - 1) * total;
}

std::int64_t prime_power_closed_form(std::int64_t z, unsigned alpha, const FactoredInt& n,
                                     std::uint64_t p, const FactorisationTables& tables) {
  if (alpha == 0) throw DomainError("alpha must be >= 1");
  require_coprime_prime(p, n);
  const std::int64_t zp1 = checked_add(z, std::int64_t{1});
  std::int64_t total = 0;
  std::int64_t zl = 1;
  for (unsigned ell = 0; ell <= n.big_omega(); ++ell) {
    const auto fl = static_cast<std::int64_t>(f_ell(ell, n, tables));
    if (fl != 0) {
      const std::int64_t bracket = checked_add(
          checked_mul(binomial_i64(alpha + ell - 1, ell), z),
          checked_mul(binomial_i64(alpha + ell - 1, alpha), zp1), "closed form");
      total = checked_add(total, checked_mul(checked_mul(zl, bracket), fl), "closed form");
    }
    if (ell < n.big_omega()) zl = checked_mul(zl, z, "closed form");
  }
  return checked_mul(power(zp1, alpha - 1), total, "closed form");
}

std::uint64_t fk_prime_power_expansion(std::uint64_t p, unsigned alpha, const FactoredInt& n,
                                       unsigned k, const FactorisationTables& tables) {
  if (alpha == 0) throw DomainError("alpha must be >= 1");
  require_coprime_prime(p, n);
  if (k == 0) return 0;  // p^alpha n >= 2 has no empty factorization
  std::uint64_t total = 0;
  const unsigned lo = k > alpha ? k - alpha : 0;
  for (unsigned ell = lo; ell <= k; ++ell) {
    const std::uint64_t fl = f_ell(ell, n, tables);
    if (fl == 0) continue;
    const auto coeff = static_cast<std::uint64_t>(
        checked_mul(binomial_i64(k, ell), binomial_i64(alpha + ell - 1, k - 1), "f_k expansion"));
    total = checked_add(total, checked_mul(coeff, fl, "f_k expansion"), "f_k expansion");
  }
  return total;
}

MultiplicativityWitness non_multiplicativity_witness(const ZFamily& family) {
  if (family.limit < 6) throw RangeError("multiplicativity witness needs limit >= 6");
  MultiplicativityWitness w;
  w.g2 = family.gz(2);
  w.g3 = family.gz(3);
  w.g6 = family.gz(6);
  w.discrepancy = w.g2 * w.g3 - w.g6;
  return w;
}

TildeGrowthFit fit_tilde_growth(const ZFamily& family) {
  TildeGrowthFit fit;
  const double modulus = std::abs(family.z);
  const double b = modulus > 0.0 ? std::max(0.0, std::log(modulus) / std::log(2.0)) : 0.0;
  fit.exponent = b + kalmar_beta();
  for (std::uint64_t n = 1; n <= family.limit; ++n) {
    const double c = std::abs(family.fz_tilde(n)) / std::pow(static_cast<double>(n), fit.exponent);
    if (c > fit.constant) {
      fit.constant = c;
      fit.argmax = n;
    }
  }
  return fit;
}

DzEvaluation evaluate_family(const ZFamily& family, ComplexPoint s, const SieveTables& sieve,
                             double growth_constant) {
  DzEvaluation e;
  e.fz_tilde_series = series_eval(family.fz_tilde, s);
  const Complex zeta_n = series_eval(ones_fn<Complex>(family.limit), s);
  e.closed_form = 1.0 / (1.0 - family.z * (zeta_n - 1.0));
  e.dagger =
      series_eval(restrict_support(family.fz_tilde, squarefree_predicate(sieve)), s);
  e.dz = series_eval(family.gz, s);

  const double exponent = fit_tilde_growth(family).exponent;
  const double margin = s.sigma - exponent - 1.0;
  e.tail_bound = margin > 0.0 ? 2.0 * growth_constant *
                                    std::pow(static_cast<double>(family.limit), -margin) / margin
                              : std::numeric_limits<double>::infinity();
  return e;
}

}  // namespace zfree
