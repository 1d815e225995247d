#ifndef ZFREE_FACTORISATIO_HPP
#define ZFREE_FACTORISATIO_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zfree/arith_core.hpp"
#include "zfree/bigint.hpp"

namespace zfree {

/// Ordered-factorization counts over 1..N.
///
/// f(n) counts ordered tuples of integers >= 2 with product n (f(1) = 1),
/// f_k(n) those of length exactly k, and f_even / f_odd split f by the
/// parity of the length (the empty product of n = 1 counts as even).
/// The f_k rows are stored for k <= max_k(); when max_k() is below the
/// largest Omega(n) in range the table is truncated() and f_k lookups
/// past max_k() throw.
class FactorisationTables {
 public:
  [[nodiscard]] std::uint64_t limit() const { return limit_; }
  [[nodiscard]] unsigned max_k() const { return max_k_; }
  [[nodiscard]] bool truncated() const { return truncated_; }

  [[nodiscard]] std::uint64_t f(std::uint64_t n) const;
  [[nodiscard]] std::uint64_t fk(unsigned k, std::uint64_t n) const;
  [[nodiscard]] std::uint64_t f_even(std::uint64_t n) const;
  [[nodiscard]] std::uint64_t f_odd(std::uint64_t n) const;

  /// Values for n = 0..N (index 0 holds 0).
  [[nodiscard]] std::span<const std::uint64_t> f_values() const { return f_; }

 private:
  friend FactorisationTables build_factorisation_tables(const SieveTables&, std::uint64_t,
                                                        std::optional<unsigned>);
  void check(std::uint64_t n) const;

  std::uint64_t limit_ = 0;
  unsigned max_k_ = 0;
  unsigned max_omega_ = 0;
  bool truncated_ = false;
  std::vector<std::uint64_t> f_;
  std::vector<std::uint64_t> f_even_;
  std::vector<std::uint64_t> f_odd_;
  std::vector<std::vector<std::uint64_t>> fk_;  // fk_[k-1][n]
};

/// Builds f, f_even, f_odd and f_k (k <= max_k) by harmonic divisor sweeps,
/// O(N log N) per row. max_k defaults to the largest Omega(n), n <= limit.
/// Throws CapacityError on count overflow or an exceeded memory budget.
[[nodiscard]] FactorisationTables build_factorisation_tables(
    const SieveTables& sieve, std::uint64_t limit, std::optional<unsigned> max_k = std::nullopt);

/// f_even(n) - f_odd(n); agrees with mu(n).
[[nodiscard]] int mu_via_parity(std::uint64_t n, const FactorisationTables& tables);

/// A partition of ell with parts in nondecreasing order, plus the
/// multiplicity view (k, m_k) sorted by k.
class PartitionMultiset {
 public:
  /// Parts must be positive; they are sorted on construction.
  explicit PartitionMultiset(std::vector<unsigned> parts);

  [[nodiscard]] unsigned ell() const { return ell_; }
  [[nodiscard]] const std::vector<unsigned>& parts() const { return parts_; }
  [[nodiscard]] const std::vector<std::pair<unsigned, unsigned>>& multiplicities() const {
    return mults_;
  }
  /// Number of parts (r = m = sum of m_k).
  [[nodiscard]] unsigned size() const { return static_cast<unsigned>(parts_.size()); }

  friend bool operator==(const PartitionMultiset& a, const PartitionMultiset& b) {
    return a.parts_ == b.parts_;
  }

 private:
  unsigned ell_ = 0;
  std::vector<unsigned> parts_;
  std::vector<std::pair<unsigned, unsigned>> mults_;
};

inline constexpr unsigned kMaxPartitionEll = 90;

/// Visits every partition of ell once, parts nondecreasing, in
/// lexicographic order of the part sequence. 1 <= ell <= 90.
void for_each_partition(unsigned ell, const std::function<void(const PartitionMultiset&)>& visit);

/// Materialized form of for_each_partition.
[[nodiscard]] std::vector<PartitionMultiset> enumerate_partitions(unsigned ell);

/// Number of ordered tuples (n_1..n_r), n_j >= 2, with product n whose
/// multiset of Omega(n_j) equals lambda. Requires Omega(n) == lambda.ell().
/// Brute-force memoized search; meant for verification, not bulk use.
[[nodiscard]] std::uint64_t d_lambda(const FactoredInt& n, const PartitionMultiset& lambda);

/// ell! / prod (k!)^{m_k} * m! / prod m_k!, exactly.
[[nodiscard]] BigInt d_lambda_bound(const PartitionMultiset& lambda);

/// Smallest c with log f(n) <= l log l + c * l * log_2 l * log_3 l for every
/// 2 <= n <= tables.limit(), l = Omega(n). An empirical fit; the growth
/// statement it measures carries no explicit constant.
struct GrowthFit {
  double constant = 0.0;
  std::uint64_t argmax = 0;
};
[[nodiscard]] GrowthFit fit_factorisation_growth(const SieveTables& sieve,
                                                 const FactorisationTables& tables);

}  // namespace zfree

#endif  // ZFREE_FACTORISATIO_HPP
