#include "zfree/bigint.hpp"

#include <numeric>

#include "zfree/error.hpp"

namespace zfree {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::int64_t binomial_i64(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n-k+i) is divisible by i at every step
    const std::int64_t g = std::gcd(r, i);
    r = checked_mul(r / g, (n - k + i) / (i / g), "binomial");
  }
  return r;
}

}  // namespace zfree
