#ifndef ZFREE_SERIES_EVAL_HPP
#define ZFREE_SERIES_EVAL_HPP

#include <cstdint>
#include <string>

#include "zfree/arith_core.hpp"
#include "zfree/factorisatio.hpp"

namespace zfree {

/// zeta and zeta' at a real abscissa sigma > 1.
struct ZetaReal {
  double sigma = 0.0;
  double value = 0.0;
  double derivative = 0.0;
  std::string method;
  /// Bound on |value - zeta(sigma)|: Euler-Maclaurin remainder plus a
  /// floating-point summation allowance.
  double error_bound = 0.0;
  double derivative_error_bound = 0.0;
};

inline constexpr double kMinZetaSigma = 1.0 + 1e-6;

/// Euler-Maclaurin with four Bernoulli corrections (B2..B8). The cut-off
/// N starts at `min_terms` and doubles until the remainder bound is below
/// 1e-14 relative to max(1, zeta).
[[nodiscard]] ZetaReal zeta_real(double sigma, std::uint64_t min_terms = 32);
[[nodiscard]] double zeta_prime_real(double sigma);

/// Real root sigma > 1 of zeta(sigma) = target, target > 1.
[[nodiscard]] double solve_zeta_equals(double target);

/// The root of zeta(beta) = 2 (about 1.728647).
[[nodiscard]] double kalmar_beta();

/// -1 / (beta zeta'(beta)), positive.
[[nodiscard]] double kalmar_constant();

struct KalmarPoint {
  std::uint64_t x = 0;
  std::uint64_t sum = 0;      // sum_{n <= x} f(n), exact
  double predicted = 0.0;     // -x^beta / (beta zeta'(beta))
  double ratio = 0.0;         // sum / predicted
  double log_exponent = 0.0;  // log sum / log x
};

[[nodiscard]] KalmarPoint kalmar_ratio(std::uint64_t x, const FactorisationTables& tables);

enum class SarnakSelector { kF, kFMu2 };

struct SarnakPoint {
  std::uint64_t x = 0;
  SarnakSelector xi = SarnakSelector::kF;
  std::int64_t numerator = 0;     // sum mu(n) xi(n)
  std::uint64_t denominator = 0;  // sum |xi(n)|
  double ratio = 0.0;
};

[[nodiscard]] SarnakPoint sarnak_correlation(std::uint64_t x, SarnakSelector xi,
                                             const SieveTables& sieve,
                                             const FactorisationTables& tables);

[[nodiscard]] const char* to_string(SarnakSelector xi);

}  // namespace zfree

#endif  // ZFREE_SERIES_EVAL_HPP
