#ifndef ZFREE_FAMILY_DZ_HPP
#define ZFREE_FAMILY_DZ_HPP

#include <cstdint>
#include <limits>

#include "zfree/arith_core.hpp"
#include "zfree/bigint.hpp"
#include "zfree/dirichlet.hpp"
#include "zfree/factorisatio.hpp"

namespace zfree {

/// The family D_z for one complex parameter z, truncated at N.
///
///   F_z(1) = 1, F_z(n) = -z (n >= 2)
///   fz_tilde = Dirichlet inverse of F_z
///   gz       = Dirichlet inverse of fz_tilde * mu^2
///
/// so that sum fz_tilde(n) mu(n)^2 n^-s is the truncated D_z^dagger and
/// sum gz(n) n^-s the truncated D_z. T is Complex or, for integer z, an
/// exact int64.
template <class T>
struct BasicZFamily {
  T z{};
  std::uint64_t limit = 0;
  BasicArithFn<T> fz;
  BasicArithFn<T> fz_tilde;
  BasicArithFn<T> gz;
  /// Root of zeta(beta) = 1 + 1/|z|; -infinity for z = 0.
  double beta_z = -std::numeric_limits<double>::infinity();
};

using ZFamily = BasicZFamily<Complex>;
using IntZFamily = BasicZFamily<std::int64_t>;

[[nodiscard]] ZFamily build_context(Complex z, std::uint64_t limit, const SieveTables& sieve);
/// Exact variant; throws CapacityError if a value leaves int64.
[[nodiscard]] IntZFamily build_exact_context(std::int64_t z, std::uint64_t limit,
                                             const SieveTables& sieve);

/// Root of zeta(sigma) = 1 + 1/|z|; -infinity for z = 0.
[[nodiscard]] double beta_z(Complex z);

/// sum_{k=0}^{alpha} z^k C(k+l, l) C(alpha+l-1, k+l-1).
[[nodiscard]] Complex B_sum(Complex z, unsigned alpha, unsigned ell);
/// C(alpha+l-1, l) (z (z+1)^(alpha-1) + (l/alpha) (z+1)^alpha).
[[nodiscard]] Complex B_closed(Complex z, unsigned alpha, unsigned ell);
[[nodiscard]] std::int64_t B_sum(std::int64_t z, unsigned alpha, unsigned ell);
/// Integer form: C(alpha+l-1, l) z (z+1)^(alpha-1) + C(alpha+l-1, alpha) (z+1)^alpha,
/// using C(alpha+l-1, l) * l / alpha = C(alpha+l-1, alpha).
[[nodiscard]] std::int64_t B_closed(std::int64_t z, unsigned alpha, unsigned ell);

/// C(k+l, l) C(alpha+l-1, k+l-1) == C(alpha+l-1, l) (C(alpha-1, k-1) + (l/alpha) C(alpha, k))
/// in exact rationals, with C(alpha-1, -1) = 0. Requires 0 <= k <= alpha, l >= 1.
[[nodiscard]] bool binomial_identity_check(unsigned alpha, unsigned k, unsigned ell);

/// fz_tilde(p^alpha n) from the f_l(n) via
///   (z+1)^(alpha-1) sum_l z^l (z + l (z+1)/alpha) C(alpha+l-1, l) f_l(n).
/// The sum starts at l = 0 with f_0(n) = I(n); that term vanishes for
/// n >= 2 and supplies fz_tilde(p^alpha) = z (z+1)^(alpha-1) at n = 1.
/// Requires p prime, p not dividing n, alpha >= 1, and f_l(n) available in
/// `tables` for l <= Omega(n).
[[nodiscard]] Complex prime_power_closed_form(Complex z, unsigned alpha, const FactoredInt& n,
                                              std::uint64_t p, const FactorisationTables& tables);
[[nodiscard]] std::int64_t prime_power_closed_form(std::int64_t z, unsigned alpha,
                                                   const FactoredInt& n, std::uint64_t p,
                                                   const FactorisationTables& tables);

/// f_k(p^alpha n) = sum_{l = max(0, k - alpha)}^{k} C(k, l) C(alpha+l-1, k-1) f_l(n),
/// again with f_0(n) = I(n) so that n = 1 is covered. Requires p not dividing n.
[[nodiscard]] std::uint64_t fk_prime_power_expansion(std::uint64_t p, unsigned alpha,
                                                     const FactoredInt& n, unsigned k,
                                                     const FactorisationTables& tables);

/// G_z(2) G_z(3) - G_z(6); nonzero exactly when z is not 0 or -1.
struct MultiplicativityWitness {
  Complex g2, g3, g6;
  Complex discrepancy;
};
[[nodiscard]] MultiplicativityWitness non_multiplicativity_witness(const ZFamily& family);

/// Smallest c with |fz_tilde(n)| <= c n^(B + beta) on the truncation,
/// B = max(0, log|z| / log 2), beta = kalmar_beta().
struct TildeGrowthFit {
  double exponent = 0.0;  // B + beta
  double constant = 0.0;
  std::uint64_t argmax = 0;
};
[[nodiscard]] TildeGrowthFit fit_tilde_growth(const ZFamily& family);

/// Truncated series for the family at s.
struct DzEvaluation {
  Complex fz_tilde_series;  // sum fz_tilde(n) n^-s
  Complex closed_form;      // 1 / (1 - z (zeta_N(s) - 1)), zeta_N truncated at N
  Complex dagger;           // D_z^dagger truncated: sum fz_tilde(n) mu(n)^2 n^-s
  Complex dz;               // D_z truncated: sum gz(n) n^-s
  /// Tail allowance for |fz_tilde_series - closed_form| given a growth
  /// constant c: 2 c N^(B+beta+1-sigma) / (sigma - B - beta - 1), one tail
  /// for each side; infinite when sigma <= B + beta + 1.
  double tail_bound = 0.0;
};
[[nodiscard]] DzEvaluation evaluate_family(const ZFamily& family, ComplexPoint s,
                                           const SieveTables& sieve, double growth_constant);

}  // namespace zfree

#endif  // ZFREE_FAMILY_DZ_HPP
