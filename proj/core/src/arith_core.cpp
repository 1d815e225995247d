#include "zfree/arith_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "zfree/error.hpp"

namespace zfree {

FactoredInt::FactoredInt(std::uint64_t n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {
  if (n == 0) throw DomainError("FactoredInt: n must be positive");
  std::uint64_t product = 1;
  std::uint64_t previous = 1;
  for (const auto& [p, e] : factors_) {
    if (p <= previous || e == 0) {
      throw DomainError("FactoredInt: primes must increase and exponents be >= 1");
    }
    for (unsigned i = 0; i < e; ++i) product = checked_mul(product, p, "FactoredInt");
    big_omega_ += e;
    previous = p;
  }
  if (product != n) throw DomainError("FactoredInt: factors do not multiply to n");
}

unsigned FactoredInt::max_exponent() const {
  unsigned m = 0;
  for (const auto& f : factors_) m = std::max(m, f.exponent);
  return m;
}

int FactoredInt::mobius() const {
  if (!is_squarefree()) return 0;
  return factors_.size() % 2 == 0 ? 1 : -1;
}

bool FactoredInt::is_kappa_free(unsigned kappa) const {
  if (kappa < 2) throw DomainError("kappa must be >= 2");
  return max_exponent() < kappa;
}

bool FactoredInt::divisible_by(std::uint64_t p) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [p](const PrimePower& f) { return f.prime == p; });
}

std::size_t memory_budget_bytes() {
  std::size_t mib = 2048;
  if (const char* env = std::getenv("ZFREE_MEMORY_BUDGET_MB")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) mib = static_cast<std::size_t>(v);
  }
  return mib << 20;
}

void require_budget(std::size_t bytes, const char* what) {
  const std::size_t budget = memory_budget_bytes();
  if (bytes > budget) {
    throw CapacityError(std::string(what) + " needs " + std::to_string(bytes >> 20) +
                        " MiB, over the " + std::to_string(budget >> 20) +
                        " MiB budget (ZFREE_MEMORY_BUDGET_MB)");
  }
}

SieveTables build_sieve(std::uint64_t limit) {
  if (limit < 2) throw CapacityError("sieve limit must be >= 2");
  if (limit > kMaxSieveLimit) {
    throw CapacityError("sieve limit exceeds " + std::to_string(kMaxSieveLimit));
  }
  // spf + mu + big_omega + small_omega + max_exp + scratch exponent byte
  require_budget(static_cast<std::size_t>(limit + 1) * 9, "sieve");

  SieveTables t;
  t.limit_ = limit;
  const std::size_t size = static_cast<std::size_t>(limit) + 1;
  t.spf_.assign(size, 0);
  t.mu_.assign(size, 0);
  t.big_omega_.assign(size, 0);
  t.small_omega_.assign(size, 0);
  t.max_exp_.assign(size, 0);
  std::vector<std::uint8_t> spf_exp(size, 0);

  t.mu_[1] = 1;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (t.spf_[n] == 0) {
      t.spf_[n] = static_cast<std::uint32_t>(n);
      t.primes_.push_back(static_cast<std::uint32_t>(n));
    }
    const std::uint32_t p = t.spf_[n];
    for (const std::uint32_t q : t.primes_) {
      if (q > p || n * q > limit) break;
      t.spf_[n * q] = q;
    }

    const std::uint64_t m = n / p;
    t.big_omega_[n] = static_cast<std::uint8_t>(t.big_omega_[m] + 1);
    if (m % p == 0) {
      t.mu_[n] = 0;
      t.small_omega_[n] = t.small_omega_[m];
      spf_exp[n] = static_cast<std::uint8_t>(spf_exp[m] + 1);
      t.max_exp_[n] = std::max(t.max_exp_[m], spf_exp[n]);
    } else {
      t.mu_[n] = static_cast<std::int8_t>(-t.mu_[m]);
      t.small_omega_[n] = static_cast<std::uint8_t>(t.small_omega_[m] + 1);
      spf_exp[n] = 1;
      t.max_exp_[n] = std::max<std::uint8_t>(t.max_exp_[m], 1);
    }
  }
  return t;
}

void SieveTables::check(std::uint64_t n) const {
  if (n == 0 || n > limit_) {
    throw RangeError("n = " + std::to_string(n) + " outside sieve range 1.." +
                     std::to_string(limit_));
  }
}

std::uint32_t SieveTables::spf(std::uint64_t n) const {
  check(n);
  if (n == 1) throw DomainError("1 has no smallest prime factor");
  return spf_[n];
}

int SieveTables::mu(std::uint64_t n) const {
  check(n);
  return mu_[n];
}

unsigned SieveTables::big_omega(std::uint64_t n) const {
  check(n);
  return big_omega_[n];
}

unsigned SieveTables::small_omega(std::uint64_t n) const {
  check(n);
  return small_omega_[n];
}

unsigned SieveTables::max_exponent(std::uint64_t n) const {
  check(n);
  return max_exp_[n];
}

bool SieveTables::is_prime(std::uint64_t n) const {
  check(n);
  return n >= 2 && spf_[n] == n;
}

std::uint32_t SieveTables::nth_prime(std::uint64_t j) const {
  if (j == 0 || j > primes_.size()) {
    throw RangeError("prime index " + std::to_string(j) + " beyond sieve (" +
                     std::to_string(primes_.size()) + " primes)");
  }
  return primes_[j - 1];
}

std::uint64_t SieveTables::prime_pi(std::uint64_t x) const {
  if (x > limit_) throw RangeError("prime_pi argument beyond sieve limit");
  return static_cast<std::uint64_t>(
      std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

FactoredInt factorize(std::uint64_t n, const SieveTables& tables) {
  if (n == 0 || n > tables.limit()) {
    throw RangeError("factorize: n = " + std::to_string(n) + " outside 1.." +
                     std::to_string(tables.limit()));
  }
  std::vector<PrimePower> factors;
  std::uint64_t m = n;
  while (m > 1) {
    const std::uint32_t p = tables.spf(m);
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    factors.push_back({p, e});
  }
  return FactoredInt(n, std::move(factors));
}

bool is_kappa_free(std::uint64_t n, unsigned kappa, const SieveTables& tables) {
  if (kappa < 2) throw DomainError("kappa must be >= 2");
  return tables.max_exponent(n) < kappa;
}

int mobius(std::uint64_t n, const SieveTables& tables) { return tables.mu(n); }

double iterated_log(double x, unsigned k) {
  for (unsigned i = 0; i < k; ++i) x = std::max(std::log(x), 1.0);
  return x;
}

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace zfree
