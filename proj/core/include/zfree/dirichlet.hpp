#ifndef ZFREE_DIRICHLET_HPP
#define ZFREE_DIRICHLET_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "zfree/arith_core.hpp"
#include "zfree/error.hpp"

namespace zfree {

using Complex = std::complex<double>;

/// s = sigma + i t.
struct ComplexPoint {
  double sigma = 0.0;
  double t = 0.0;

  [[nodiscard]] Complex value() const { return {sigma, t}; }
};

// Ring operations for the two supported value types. Integer arithmetic is
// overflow-checked; complex arithmetic is plain IEEE double.
namespace ring {

inline std::int64_t add(std::int64_t a, std::int64_t b) { return checked_add(a, b, "Dirichlet sum"); }
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  return checked_mul(a, b, "Dirichlet product");
}
inline std::int64_t unit_inverse(std::int64_t a) {
  if (a == 1 || a == -1) return a;
  throw DomainError("exact Dirichlet inverse needs F(1) = +1 or -1");
}
inline Complex add(Complex a, Complex b) { return a + b; }
inline Complex mul(Complex a, Complex b) { return a * b; }
inline Complex unit_inverse(Complex a) {
  if (a == Complex{}) throw DomainError("Dirichlet inverse needs F(1) != 0");
  return 1.0 / a;
}

}  // namespace ring

/// A truncated arithmetic function n -> F(n), 1 <= n <= limit.
template <class T>
class BasicArithFn {
 public:
  using value_type = T;

  BasicArithFn() = default;
  explicit BasicArithFn(std::uint64_t limit, T fill = T{})
      : values_(static_cast<std::size_t>(limit) + 1, fill) {
    if (limit == 0) throw DomainError("arithmetic function limit must be >= 1");
    values_[0] = T{};
  }
  BasicArithFn(std::uint64_t limit, const std::function<T(std::uint64_t)>& generator)
      : BasicArithFn(limit) {
    for (std::uint64_t n = 1; n <= limit; ++n) values_[n] = generator(n);
  }

  [[nodiscard]] std::uint64_t limit() const {
    return values_.empty() ? 0 : values_.size() - 1;
  }

  [[nodiscard]] T operator()(std::uint64_t n) const { return values_[n]; }
  [[nodiscard]] T at(std::uint64_t n) const {
    if (n == 0 || n > limit()) {
      throw RangeError("arithmetic function index " + std::to_string(n) + " outside 1.." +
                       std::to_string(limit()));
    }
    return values_[n];
  }
  void set(std::uint64_t n, T v) {
    if (n == 0 || n > limit()) throw RangeError("arithmetic function index out of range");
    values_[n] = v;
  }

  /// Values for n = 1..limit.
  [[nodiscard]] std::span<const T> values() const {
    return std::span<const T>(values_).subspan(1);
  }

  friend bool operator==(const BasicArithFn&, const BasicArithFn&) = default;

 private:
  std::vector<T> values_;  // values_[0] unused
};

using ArithFn = BasicArithFn<Complex>;
using IntArithFn = BasicArithFn<std::int64_t>;

template <class T>
[[nodiscard]] BasicArithFn<T> unit_fn(std::uint64_t limit) {
  BasicArithFn<T> out(limit);
  out.set(1, T{1});
  return out;
}

/// The constant function 1 on 1..limit.
template <class T>
[[nodiscard]] BasicArithFn<T> ones_fn(std::uint64_t limit) {
  return BasicArithFn<T>(limit, T{1});
}

template <class T>
[[nodiscard]] BasicArithFn<T> mobius_fn(const SieveTables& sieve, std::uint64_t limit) {
  if (limit > sieve.limit()) throw RangeError("mobius_fn: limit exceeds sieve");
  return BasicArithFn<T>(limit, [&](std::uint64_t n) { return T(sieve.mu(n)); });
}

/// H(n) = sum_{ab = n} F(a) G(b). O(N log N).
template <class T>
[[nodiscard]] BasicArithFn<T> convolve(const BasicArithFn<T>& f, const BasicArithFn<T>& g) {
  if (f.limit() != g.limit()) {
    throw DomainError("convolve: limits differ (" + std::to_string(f.limit()) + " vs " +
                      std::to_string(g.limit()) + ")");
  }
  const std::uint64_t limit = f.limit();
  std::vector<T> acc(static_cast<std::size_t>(limit) + 1, T{});
  for (std::uint64_t a = 1; a <= limit; ++a) {
    const T fa = f(a);
    if (fa == T{}) continue;
    for (std::uint64_t b = 1, n = a; n <= limit; ++b, n += a) {
      acc[n] = ring::add(acc[n], ring::mul(fa, g(b)));
    }
  }
  return BasicArithFn<T>(limit, [&](std::uint64_t n) { return acc[n]; });
}

/// Dirichlet inverse by forward substitution:
/// inv(1) = 1/F(1), inv(n) = -inv(1) * sum_{d | n, d > 1} F(d) inv(n/d).
template <class T>
[[nodiscard]] BasicArithFn<T> dirichlet_inverse(const BasicArithFn<T>& f) {
  const std::uint64_t limit = f.limit();
  if (limit == 0) throw DomainError("dirichlet_inverse: empty function");
  const T inv1 = ring::unit_inverse(f(1));
  std::vector<T> acc(static_cast<std::size_t>(limit) + 1, T{});
  BasicArithFn<T> inv(limit);
  for (std::uint64_t m = 1; m <= limit; ++m) {
    const T value = m == 1 ? inv1 : ring::mul(-inv1, acc[m]);
    inv.set(m, value);
    if (value == T{}) continue;
    for (std::uint64_t d = 2, n = 2 * m; n <= limit; ++d, n += m) {
      acc[n] = ring::add(acc[n], ring::mul(f(d), value));
    }
  }
  return inv;
}

namespace detail {

template <class T>
T ordered_tuple_sum(const BasicArithFn<T>& f, std::uint64_t n, unsigned k) {
  if (k == 0) return n == 1 ? T{1} : T{};
  if (n < 2) return T{};
  T total{};
  for (std::uint64_t d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    const T rest = ordered_tuple_sum(f, n / d, k - 1);
    if (rest != T{}) total = ring::add(total, ring::mul(f(d), rest));
  }
  return total;
}

}  // namespace detail

/// f_k(F; n): sum over ordered k-tuples (n_1..n_k), n_j >= 2, with product
/// n of F(n_1)...F(n_k). Enumerates tuples directly; cost grows with f(n).
template <class T>
[[nodiscard]] T f_k_F(const BasicArithFn<T>& f, std::uint64_t n, unsigned k) {
  if (n == 0 || n > f.limit()) throw RangeError("f_k_F: n outside function range");
  if (k == 0) throw DomainError("f_k_F: k must be >= 1");
  // no k-tuple of factors >= 2 exists once 2^k > n
  if (k >= 64 || (std::uint64_t{1} << k) > n) return T{};
  return detail::ordered_tuple_sum(f, n, k);
}

/// Dirichlet inverse through I(n) + sum_k (-1)^k f_k(F; n). F is scaled to
/// F(1) = 1 internally and the result rescaled by 1/F(1). Exponential in
/// Omega(n): an oracle for n up to a few thousand.
template <class T>
[[nodiscard]] BasicArithFn<T> inverse_via_alternating(const BasicArithFn<T>& f) {
  const std::uint64_t limit = f.limit();
  const T inv1 = ring::unit_inverse(f(1));
  const BasicArithFn<T> normalized(limit, [&](std::uint64_t n) {
    return n == 1 ? T{1} : ring::mul(f(n), inv1);
  });
  BasicArithFn<T> out(limit);
  out.set(1, inv1);
  for (std::uint64_t n = 2; n <= limit; ++n) {
    T total{};
    for (unsigned k = 1; (std::uint64_t{1} << k) <= n; ++k) {
      const T term = f_k_F(normalized, n, k);
      total = (k % 2 == 0) ? ring::add(total, term) : ring::add(total, -term);
    }
    out.set(n, ring::mul(total, inv1));
  }
  return out;
}

/// Pointwise product with the indicator of `keep`.
template <class T>
[[nodiscard]] BasicArithFn<T> restrict_support(const BasicArithFn<T>& f,
                                               const std::function<bool(std::uint64_t)>& keep) {
  return BasicArithFn<T>(f.limit(),
                         [&](std::uint64_t n) { return keep(n) ? f(n) : T{}; });
}

/// Predicate n in N_kappa, backed by the sieve.
[[nodiscard]] std::function<bool(std::uint64_t)> kappa_free_predicate(const SieveTables& sieve,
                                                                      unsigned kappa);
/// Predicate mu(n)^2 == 1.
[[nodiscard]] std::function<bool(std::uint64_t)> squarefree_predicate(const SieveTables& sieve);

/// sum_{n <= x} F(n).
template <class T>
[[nodiscard]] T summatory(const BasicArithFn<T>& f, std::uint64_t x) {
  if (x > f.limit()) throw RangeError("summatory: x exceeds function limit");
  T total{};
  for (std::uint64_t n = 1; n <= x; ++n) total = ring::add(total, f(n));
  return total;
}

/// sum_{n <= N} F(n) n^{-s} with n^{-s} = exp(-s log n); N = f.limit().
[[nodiscard]] Complex series_eval(const ArithFn& f, ComplexPoint s);
[[nodiscard]] Complex series_eval(const IntArithFn& f, ComplexPoint s);

[[nodiscard]] ArithFn to_complex(const IntArithFn& f);

/// True when every value has zero imaginary part and an integral real part
/// that fits in int64.
[[nodiscard]] bool is_integer_valued(const ArithFn& f);
/// Exact copy of an integer-valued function; throws DomainError otherwise.
[[nodiscard]] IntArithFn to_integer(const ArithFn& f);

/// Largest |F(n)| over the range.
[[nodiscard]] double max_abs(const ArithFn& f);

/// CSV rows "n,re,im" (no header), n ascending from 1 without gaps.
/// Doubles are written with 17 significant digits so reading back is exact.
void write_arith_csv(std::ostream& out, const ArithFn& f);
void write_arith_csv(std::ostream& out, const IntArithFn& f);
/// Accepts an optional "n,re,im" header line and a missing im column.
[[nodiscard]] ArithFn read_arith_csv(std::istream& in);

}  // namespace zfree

#endif  // ZFREE_DIRICHLET_HPP
