// Brute-force reference implementations used only by the tests. Nothing
// here calls into the library: factorizations come from trial division and
// counts from explicit tuple enumeration.
#ifndef ZFREE_TESTS_ORACLES_HPP
#define ZFREE_TESTS_ORACLES_HPP

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

inline std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline int mobius(std::uint64_t n) {
  int mu = 1;
  for (const auto& [p, e] : trial_factor(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

inline unsigned big_omega(std::uint64_t n) {
  unsigned s = 0;
  for (const auto& pe : trial_factor(n)) s += pe.second;
  return s;
}

inline unsigned max_exponent(std::uint64_t n) {
  unsigned m = 0;
  for (const auto& pe : trial_factor(n)) m = std::max(m, pe.second);
  return m;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

/// Visits every ordered tuple (n_1..n_k), n_j >= 2, with product n.
inline void for_each_ordered_factorization(
    std::uint64_t n, const std::function<void(const std::vector<std::uint64_t>&)>& visit) {
  std::vector<std::uint64_t> tuple;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t m) {
    if (m == 1) {
      visit(tuple);
      return;
    }
    for (std::uint64_t d = 2; d <= m; ++d) {
      if (m % d != 0) continue;
      tuple.push_back(d);
      rec(m / d);
      tuple.pop_back();
    }
  };
  rec(n);
}

/// counts[k] = number of ordered factorizations of n of length k
/// (counts[0] = 1 for n = 1, the empty product).
inline std::vector<std::uint64_t> factorization_counts_by_length(std::uint64_t n) {
  std::vector<std::uint64_t> counts(1, 0);
  for_each_ordered_factorization(n, [&](const std::vector<std::uint64_t>& t) {
    if (t.size() >= counts.size()) counts.resize(t.size() + 1, 0);
    ++counts[t.size()];
  });
  return counts;
}

/// Ordered Bell number sum_j j! S(l, j).
inline std::uint64_t fubini(unsigned ell) {
  std::vector<std::vector<std::uint64_t>> s(ell + 1, std::vector<std::uint64_t>(ell + 1, 0));
  s[0][0] = 1;
  for (unsigned i = 1; i <= ell; ++i) {
    for (unsigned j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  }
  std::uint64_t total = 0;
  std::uint64_t fact = 1;
  for (unsigned j = 0; j <= ell; ++j) {
    if (j > 0) fact *= j;
    total += fact * s[ell][j];
  }
  return total;
}

/// p(l) by Euler's pentagonal number recurrence.
inline std::uint64_t partition_count(unsigned ell) {
  std::vector<std::int64_t> p(ell + 1, 0);
  p[0] = 1;
  for (unsigned n = 1; n <= ell; ++n) {
    std::int64_t total = 0;
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t g1 = k * (3 * k - 1) / 2;
      const std::int64_t g2 = k * (3 * k + 1) / 2;
      if (g1 > static_cast<std::int64_t>(n)) break;
      const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      total += sign * p[n - g1];
      if (g2 <= static_cast<std::int64_t>(n)) total += sign * p[n - g2];
    }
    p[n] = total;
  }
  return static_cast<std::uint64_t>(p[ell]);
}

/// d_lambda by enumerating every ordered factorization and comparing the
/// sorted Omega values against the sorted parts.
inline std::uint64_t d_lambda(std::uint64_t n, std::vector<unsigned> parts) {
  std::sort(parts.begin(), parts.end());
  std::uint64_t count = 0;
  for_each_ordered_factorization(n, [&](const std::vector<std::uint64_t>& t) {
    if (t.size() != parts.size()) return;
    std::vector<unsigned> omegas;
    for (const auto v : t) omegas.push_back(big_omega(v));
    std::sort(omegas.begin(), omegas.end());
    if (omegas == parts) ++count;
  });
  return count;
}

/// Dirichlet inverse by the defining recurrence with trial-division divisors.
template <class T>
std::vector<T> dirichlet_inverse(const std::vector<T>& f) {  // f[0] unused
  const std::size_t limit = f.size() - 1;
  std::vector<T> inv(limit + 1, T{});
  inv[1] = T{1} / f[1];
  for (std::size_t n = 2; n <= limit; ++n) {
    T acc{};
    for (std::size_t d = 2; d <= n; ++d) {
      if (n % d == 0) acc += f[d] * inv[n / d];
    }
    inv[n] = -acc / f[1];
  }
  return inv;
}

/// All strictly increasing index tuples j_1 < ... < j_l with
/// prod p(ceil(j_i / (kappa-1))) == n, searched exhaustively.
/// `primes` must contain every prime <= n.
inline std::vector<std::vector<std::uint64_t>> psi_candidates(
    std::uint64_t n, unsigned kappa, const std::vector<std::uint64_t>& primes) {
  const std::uint64_t block = kappa - 1;
  auto tilde = [&](std::uint64_t j) { return primes[(j + block - 1) / block - 1]; };
  const std::uint64_t max_j = primes.size() * block;
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> tuple;
  std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t m,
                                                              std::uint64_t next) {
    if (m == 1) {
      if (!tuple.empty()) out.push_back(tuple);
      return;
    }
    for (std::uint64_t j = next; j <= max_j; ++j) {
      const std::uint64_t p = tilde(j);
      if (p > m) break;
      if (m % p != 0) continue;
      tuple.push_back(j);
      rec(m / p, j + 1);
      tuple.pop_back();
    }
  };
  rec(n, 1);
  return out;
}

}  // namespace oracle

#endif  // ZFREE_TESTS_ORACLES_HPP
