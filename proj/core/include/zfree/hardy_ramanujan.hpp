#ifndef ZFREE_HARDY_RAMANUJAN_HPP
#define ZFREE_HARDY_RAMANUJAN_HPP

#include <cstdint>
#include <vector>

#include "zfree/arith_core.hpp"
#include "zfree/factorisatio.hpp"

namespace zfree {

enum class ProfileKind { kSmallOmega, kBigOmega, kKappaFree };

/// Counts of n <= x bucketed by l: omega(n) = l, Omega(n) = l, or
/// (n kappa-free and Omega(n) = l). Built in one pass over the sieve.
struct CountingProfile {
  ProfileKind kind = ProfileKind::kBigOmega;
  std::uint64_t x = 0;
  unsigned kappa = 0;  // only meaningful for kKappaFree
  std::vector<std::uint64_t> per_ell;

  [[nodiscard]] std::uint64_t at(unsigned ell) const {
    return ell < per_ell.size() ? per_ell[ell] : 0;
  }
  [[nodiscard]] std::uint64_t total() const;
};

[[nodiscard]] CountingProfile omega_profile(std::uint64_t x, const SieveTables& sieve);
[[nodiscard]] CountingProfile big_omega_profile(std::uint64_t x, const SieveTables& sieve);
[[nodiscard]] CountingProfile kappa_profile(std::uint64_t x, unsigned kappa,
                                            const SieveTables& sieve);

[[nodiscard]] std::uint64_t count_omega(std::uint64_t x, unsigned ell, const SieveTables& sieve);
[[nodiscard]] std::uint64_t count_bigomega(std::uint64_t x, unsigned ell,
                                           const SieveTables& sieve);
/// N_{kappa,l}(x) = #{n <= x : n kappa-free, Omega(n) = l}.
[[nodiscard]] std::uint64_t N_kappa_ell(std::uint64_t x, unsigned kappa, unsigned ell,
                                        const SieveTables& sieve);

/// p(ceil(j / (kappa - 1))): the primes in order, each repeated kappa - 1 times.
[[nodiscard]] std::uint64_t tilde_p(std::uint64_t j, unsigned kappa, const SieveTables& sieve);

/// The index tuple j_1 < ... < j_l minimizing j_1 + ... + j_l subject to
/// n = tilde_p(j_1) ... tilde_p(j_l), and J = j_l (J(1) = 0).
struct PsiTuple {
  std::vector<std::uint64_t> indices;
  std::uint64_t J = 0;
};

/// Greedy construction: p^e || n takes the e smallest indices of p's block.
/// Throws DomainError when n is not kappa-free.
[[nodiscard]] PsiTuple psi_tuple(std::uint64_t n, unsigned kappa, const SieveTables& sieve);

/// Right side of the kappa-free Hardy-Ramanujan bound
///   C1 x / log x * ((kappa-1) log_2 x + (kappa-1) C2)^(l-1) / (l-1)!.
[[nodiscard]] double lemma_bound_rhs(double x, unsigned kappa, unsigned ell, double c1, double c2);

struct LemmaBoundReport {
  double x = 0.0;
  unsigned kappa = 0;
  unsigned ell = 0;
  std::uint64_t lhs = 0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs / rhs
  bool pass = false;   // ratio <= 1
};

[[nodiscard]] LemmaBoundReport check_lemma_bound(std::uint64_t x, unsigned kappa, unsigned ell,
                                                 double c1, double c2, const SieveTables& sieve);

/// sum_{p : p^2 < x} 1 / (p log(x/p)).
[[nodiscard]] double prime_reciprocal_log_sum(double x, const SieveTables& sieve);

/// sup over 2 <= x <= x_max of log x * prime_reciprocal_log_sum(x) - log_2 x.
/// The expression decreases in x between consecutive prime squares, so the
/// supremum is taken at the right limits x -> p^2+ and is exact. Any C2
/// strictly above the value satisfies the strict prime-sum inequality.
struct PrimeSumFit {
  double c2 = 0.0;
  double argmax = 0.0;
};
[[nodiscard]] PrimeSumFit fit_prime_sum_constant(double x_max, const SieveTables& sieve);

/// Minimal (C1, C2), rounded up to `resolution`, for which the kappa-free
/// bound holds at every checkpoint, kappa and l with a nonzero count. C2 is
/// fitted first from the prime-sum inequality over x <= prime_sum_x_max.
struct LemmaConstantsFit {
  double c1 = 0.0;
  double c2 = 0.0;
  double worst_ratio = 0.0;  // under the rounded constants
  double worst_x = 0.0;
  unsigned worst_kappa = 0;
  unsigned worst_ell = 0;
};
[[nodiscard]] LemmaConstantsFit fit_lemma_constants(const std::vector<std::uint64_t>& checkpoints,
                                                    const std::vector<unsigned>& kappas,
                                                    double prime_sum_x_max,
                                                    const SieveTables& sieve,
                                                    double resolution = 1e-3);

/// S(x) = sum_{n <= x} C^Omega(n) f(n) 1_{N_kappa}(n).
struct CoffeeshopSum {
  std::uint64_t x = 0;
  double c = 0.0;
  unsigned kappa = 0;
  /// Exact sum of f(n) over kappa-free n <= x with Omega(n) = l.
  std::vector<std::uint64_t> f_by_omega;
  long double value = 0.0L;
  /// log S(x) / log x.
  double exponent = 0.0;
};

[[nodiscard]] CoffeeshopSum coffeeshop_sum(std::uint64_t x, double c, unsigned kappa,
                                           const SieveTables& sieve,
                                           const FactorisationTables& tables);

}  // namespace zfree

#endif  // ZFREE_HARDY_RAMANUJAN_HPP
