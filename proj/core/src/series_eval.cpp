#include "zfree/series_eval.hpp"

#include <array>
#include <cfloat>
#include <cmath>
#include <string>

#include "zfree/error.hpp"

namespace zfree {

namespace {

// B_{2j} / (2j)! for j = 1..5; the last entry only feeds the remainder bound.
constexpr std::array<double, 5> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
};
constexpr unsigned kCorrections = 4;

struct EulerMaclaurin {
  double value;
  double derivative;
  double remainder;
  double derivative_remainder;
};

EulerMaclaurin euler_maclaurin(double s, std::uint64_t terms) {
  const double big_n = static_cast<double>(terms);
  const double log_n = std::log(big_n);

  // partial sum over n < N, smallest terms first
  double value = 0.0;
  double derivative = 0.0;
  for (std::uint64_t n = terms - 1; n >= 1; --n) {
    const double ln = std::log(static_cast<double>(n));
    const double t = std::exp(-s * ln);
    value += t;
    derivative -= ln * t;
  }

  const double n_pow = std::exp((1.0 - s) * log_n);  // N^{1-s}
  value += n_pow / (s - 1.0);
  derivative += -log_n * n_pow / (s - 1.0) - n_pow / ((s - 1.0) * (s - 1.0));
  const double n_neg = std::exp(-s * log_n);  // N^{-s}
  value += 0.5 * n_neg;
  derivative += -0.5 * log_n * n_neg;

  // T_j = B_{2j}/(2j)! * s (s+1) ... (s+2j-2) * N^{-s-2j+1}
  double rising = s;         // s (s+1) ... (s+2j-2)
  double rising_log_d = 1.0 / s;  // d/ds log(rising)
  double power = n_neg / big_n;   // N^{-s-1}
  double next_term = 0.0;
  double next_term_d = 0.0;
  for (unsigned j = 1; j <= kCorrections + 1; ++j) {
    const double term = kBernoulliOverFactorial[j - 1] * rising * power;
    const double term_d = term * (rising_log_d - log_n);
    if (j <= kCorrections) {
      value += term;
      derivative += term_d;
    } else {
      next_term = std::fabs(term);
      next_term_d = std::fabs(term_d);
    }
    const double a = s + 2.0 * j - 1.0;
    const double b = s + 2.0 * j;
    rising *= a * b;
    rising_log_d += 1.0 / a + 1.0 / b;
    power /= big_n * big_n;
  }
  // The remainder after m corrections is bounded by the first omitted term
  // for real s; the derivative bound doubles the omitted term's derivative.
  return {value, derivative, next_term, 2.0 * (next_term_d + next_term)};
}

}  // namespace

ZetaReal zeta_real(double sigma, std::uint64_t min_terms) {
  if (!(sigma >= kMinZetaSigma)) {
    throw DomainError("zeta_real: sigma must be >= 1 + 1e-6 (got " + std::to_string(sigma) + ")");
  }
  std::uint64_t terms = std::max<std::uint64_t>(min_terms, 8);
  EulerMaclaurin em = euler_maclaurin(sigma, terms);
  while (em.remainder > 1e-14 * std::max(1.0, em.value) && terms < (std::uint64_t{1} << 24)) {
    terms *= 2;
    em = euler_maclaurin(sigma, terms);
  }
  ZetaReal z;
  z.sigma = sigma;
  z.value = em.value;
  z.derivative = em.derivative;
  z.method = "euler-maclaurin(N=" + std::to_string(terms) + ",B2..B8)";
  const double rounding = 4.0 * static_cast<double>(terms) * DBL_EPSILON;
  z.error_bound = em.remainder + rounding * std::max(1.0, em.value);
  z.derivative_error_bound =
      em.derivative_remainder + rounding * std::max(1.0, std::fabs(em.derivative));
  return z;
}

double zeta_prime_real(double sigma) { return zeta_real(sigma).derivative; }

double solve_zeta_equals(double target) {
  if (!(target > 1.0)) throw DomainError("zeta(sigma) = target needs target > 1");
  double lo = kMinZetaSigma;
  if (zeta_real(lo).value < target) {
    throw DomainError("zeta(sigma) = target: root lies closer to 1 than 1e-6");
  }
  double hi = 2.0;
  while (zeta_real(hi).value > target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 4096.0) throw DomainError("zeta(sigma) = target: target too close to 1");
  }
  // zeta decreases on (1, inf): keep zeta(lo) >= target > zeta(hi)
  for (int i = 0; i < 200 && hi - lo > 4.0 * DBL_EPSILON * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (zeta_real(mid).value >= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double root = 0.5 * (lo + hi);
  const ZetaReal z = zeta_real(root);
  const double newton = root - (z.value - target) / z.derivative;
  if (newton > lo && newton < hi) root = newton;
  return root;
}

double kalmar_beta() {
  static const double beta = solve_zeta_equals(2.0);
  return beta;
}

double kalmar_constant() {
  const double beta = kalmar_beta();
  return -1.0 / (beta * zeta_prime_real(beta));
}

KalmarPoint kalmar_ratio(std::uint64_t x, const FactorisationTables& tables) {
  if (x < 1 || x > tables.limit()) {
    throw RangeError("kalmar_ratio: x must lie in 1.." + std::to_string(tables.limit()));
  }
  KalmarPoint k;
  k.x = x;
  for (std::uint64_t n = 1; n <= x; ++n) k.sum = checked_add(k.sum, tables.f(n), "Kalmar sum");
  const double beta = kalmar_beta();
  k.predicted = std::pow(static_cast<double>(x), beta) * kalmar_constant();
  k.ratio = static_cast<double>(k.sum) / k.predicted;
  k.log_exponent = x > 1 ? std::log(static_cast<double>(k.sum)) / std::log(static_cast<double>(x))
                         : 0.0;
  return k;
}

SarnakPoint sarnak_correlation(std::uint64_t x, SarnakSelector xi, const SieveTables& sieve,
                               const FactorisationTables& tables) {
  if (x < 1 || x > tables.limit()) {
    throw RangeError("sarnak_correlation: x must lie in 1.." + std::to_string(tables.limit()));
  }
  SarnakPoint s;
  s.x = x;
  s.xi = xi;
  for (std::uint64_t n = 1; n <= x; ++n) {
    const int mu = sieve.mu(n);
    if (xi == SarnakSelector::kFMu2 && mu == 0) continue;
    const std::uint64_t value = tables.f(n);
    s.denominator = checked_add(s.denominator, value, "Sarnak denominator");
    if (mu != 0) {
      s.numerator = checked_add(s.numerator, mu * static_cast<std::int64_t>(value),
                                "Sarnak numerator");
    }
  }
  s.ratio = static_cast<double>(s.numerator) / static_cast<double>(s.denominator);
  return s;
}

const char* to_string(SarnakSelector xi) { return xi == SarnakSelector::kF ? "f" : "fmu2"; }

}  // namespace zfree
