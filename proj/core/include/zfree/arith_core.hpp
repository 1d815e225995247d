#ifndef ZFREE_ARITH_CORE_HPP
#define ZFREE_ARITH_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace zfree {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer together with its prime factorization.
///
/// Factors are stored with strictly increasing primes and positive
/// exponents; the constructor rejects anything else, so every instance
/// satisfies prod p^e == n.
class FactoredInt {
 public:
  FactoredInt() = default;  // the integer 1
  FactoredInt(std::uint64_t n, std::vector<PrimePower> factors);

  [[nodiscard]] std::uint64_t value() const { return n_; }
  [[nodiscard]] const std::vector<PrimePower>& factors() const { return factors_; }
  [[nodiscard]] unsigned big_omega() const { return big_omega_; }
  [[nodiscard]] unsigned small_omega() const {
    return static_cast<unsigned>(factors_.size());
  }
  [[nodiscard]] unsigned max_exponent() const;
  [[nodiscard]] int mobius() const;
  [[nodiscard]] bool is_squarefree() const { return max_exponent() <= 1; }
  [[nodiscard]] bool is_kappa_free(unsigned kappa) const;
  [[nodiscard]] bool divisible_by(std::uint64_t p) const;

 private:
  std::uint64_t n_ = 1;
  std::vector<PrimePower> factors_;
  unsigned big_omega_ = 0;
};

/// Smallest-prime-factor sieve over 1..N with μ, Ω, ω and the largest
/// prime exponent filled in the same pass. Immutable once built.
class SieveTables {
 public:
  [[nodiscard]] std::uint64_t limit() const { return limit_; }

  [[nodiscard]] std::uint32_t spf(std::uint64_t n) const;
  [[nodiscard]] int mu(std::uint64_t n) const;
  [[nodiscard]] unsigned big_omega(std::uint64_t n) const;
  [[nodiscard]] unsigned small_omega(std::uint64_t n) const;
  [[nodiscard]] unsigned max_exponent(std::uint64_t n) const;
  [[nodiscard]] bool is_prime(std::uint64_t n) const;

  /// Primes <= limit in increasing order.
  [[nodiscard]] std::span<const std::uint32_t> primes() const { return primes_; }
  /// The j-th prime, 1-based (p(1) = 2).
  [[nodiscard]] std::uint32_t nth_prime(std::uint64_t j) const;
  /// Number of primes <= x.
  [[nodiscard]] std::uint64_t prime_pi(std::uint64_t x) const;

 private:
  friend SieveTables build_sieve(std::uint64_t limit);
  void check(std::uint64_t n) const;

  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> spf_;
  std::vector<std::int8_t> mu_;
  std::vector<std::uint8_t> big_omega_;
  std::vector<std::uint8_t> small_omega_;
  std::vector<std::uint8_t> max_exp_;
  std::vector<std::uint32_t> primes_;
};

/// Upper bound on table memory, read from ZFREE_MEMORY_BUDGET_MB
/// (default 2048 MiB).
[[nodiscard]] std::size_t memory_budget_bytes();

/// Throws CapacityError when `bytes` exceeds memory_budget_bytes().
void require_budget(std::size_t bytes, const char* what);

inline constexpr std::uint64_t kMaxSieveLimit = std::uint64_t{1} << 31;

/// Requires 2 <= limit <= kMaxSieveLimit and a fitting memory budget.
[[nodiscard]] SieveTables build_sieve(std::uint64_t limit);

[[nodiscard]] FactoredInt factorize(std::uint64_t n, const SieveTables& tables);

/// True iff no p^kappa divides n. kappa >= 2.
[[nodiscard]] bool is_kappa_free(std::uint64_t n, unsigned kappa, const SieveTables& tables);

[[nodiscard]] int mobius(std::uint64_t n, const SieveTables& tables);

/// The unit of Dirichlet convolution: 1 at n = 1, 0 elsewhere.
[[nodiscard]] constexpr int unit_I(std::uint64_t n) { return n == 1 ? 1 : 0; }

/// log_k x: the k-th iterate of x -> max(log x, 1). k = 0 returns x.
[[nodiscard]] double iterated_log(double x, unsigned k);

/// Trial division; independent of any sieve.
[[nodiscard]] bool is_prime_trial(std::uint64_t n);

}  // namespace zfree

#endif  // ZFREE_ARITH_CORE_HPP
