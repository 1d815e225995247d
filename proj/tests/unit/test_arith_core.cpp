#include <doctest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "zfree/arith_core.hpp"
#include "zfree/error.hpp"

using namespace zfree;

TEST_CASE("build_sieve small tables") {
  const SieveTables t = build_sieve(10);
  CHECK(t.spf(10) == 2);
  CHECK(t.spf(9) == 3);
  CHECK(t.mu(6) == 1);
  CHECK(t.mu(4) == 0);
  CHECK(t.mu(1) == 1);
  CHECK(t.primes().size() == 4);
  CHECK(t.nth_prime(4) == 7);
  CHECK(t.prime_pi(10) == 4);
}

TEST_CASE("build_sieve rejects bad limits") {
  CHECK_THROWS_AS((void)build_sieve(1), CapacityError);
  CHECK_THROWS_AS((void)build_sieve(0), CapacityError);
  CHECK_THROWS_AS((void)build_sieve(kMaxSieveLimit + 1), CapacityError);
}

TEST_CASE("build_sieve honours the memory budget") {
  setenv("ZFREE_MEMORY_BUDGET_MB", "1", 1);
  CHECK_THROWS_AS((void)build_sieve(10'000'000), CapacityError);
  CHECK_NOTHROW((void)build_sieve(1000));
  unsetenv("ZFREE_MEMORY_BUDGET_MB");
}

TEST_CASE("sieve to one million spot checks against trial division") {
  const SieveTables t = build_sieve(1'000'000);
  REQUIRE(oracle::is_prime(999983));
  CHECK(t.mu(999983) == -1);
  CHECK(t.is_prime(999983));
  CHECK(t.prime_pi(1'000'000) == 78498);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(2, 1'000'000);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = pick(rng);
    CHECK(t.mu(n) == oracle::mobius(n));
    CHECK(t.big_omega(n) == oracle::big_omega(n));
    CHECK(t.max_exponent(n) == oracle::max_exponent(n));
    CHECK(t.spf(n) == oracle::trial_factor(n).front().first);
  }
}

TEST_CASE("sieve invariants hold exhaustively to 10^4") {
  const SieveTables t = build_sieve(10'000);
  for (std::uint64_t n = 2; n <= 10'000; ++n) {
    const std::uint64_t p = t.spf(n);
    CHECK(oracle::is_prime(p));
    CHECK(n % p == 0);
    CHECK(t.mu(n) >= -1);
    CHECK(t.mu(n) <= 1);
    CHECK((t.mu(n) == 0) == (t.max_exponent(n) >= 2));
  }
}

TEST_CASE("factorize examples") {
  const SieveTables t = build_sieve(5000);
  const FactoredInt twelve = factorize(12, t);
  CHECK(twelve.factors() == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(twelve.big_omega() == 3);
  CHECK(twelve.small_omega() == 2);

  const FactoredInt one = factorize(1, t);
  CHECK(one.factors().empty());
  CHECK(one.big_omega() == 0);
  CHECK(one.small_omega() == 0);

  const FactoredInt f4400 = factorize(4400, t);
  CHECK(f4400.factors() == std::vector<PrimePower>{{2, 4}, {5, 2}, {11, 1}});
  CHECK(f4400.big_omega() == 7);

  CHECK_THROWS_AS((void)factorize(0, t), RangeError);
  CHECK_THROWS_AS((void)factorize(5001, t), RangeError);
}

TEST_CASE("factorize reconstructs n") {
  const SieveTables t = build_sieve(20'000);
  for (std::uint64_t n = 1; n <= 20'000; ++n) {
    const FactoredInt f = factorize(n, t);
    std::uint64_t product = 1;
    unsigned omega = 0;
    for (const auto& [p, e] : f.factors()) {
      for (unsigned i = 0; i < e; ++i) product *= p;
      omega += e;
    }
    REQUIRE(product == n);
    CHECK(omega == f.big_omega());
    CHECK(f.big_omega() >= f.small_omega());
  }
}

TEST_CASE("FactoredInt validates its factor list") {
  CHECK_THROWS_AS(FactoredInt(12, {{3, 1}, {2, 2}}), DomainError);
  CHECK_THROWS_AS(FactoredInt(12, {{2, 1}, {3, 1}}), DomainError);
  CHECK_THROWS_AS(FactoredInt(4, {{2, 0}, {2, 2}}), DomainError);
  CHECK(FactoredInt(12, {{2, 2}, {3, 1}}).mobius() == 0);
}

TEST_CASE("is_kappa_free") {
  const SieveTables t = build_sieve(5000);
  CHECK_FALSE(is_kappa_free(8, 3, t));
  CHECK(is_kappa_free(8, 4, t));
  CHECK(is_kappa_free(4400, 5, t));
  CHECK_FALSE(is_kappa_free(4400, 4, t));
  CHECK(is_kappa_free(1, 2, t));
  CHECK_THROWS_AS((void)is_kappa_free(8, 1, t), DomainError);
}

TEST_CASE("mobius and unit_I") {
  const SieveTables t = build_sieve(100);
  CHECK(unit_I(1) == 1);
  CHECK(unit_I(2) == 0);
  CHECK(mobius(30, t) == -1);
  CHECK(mobius(12, t) == 0);
}

TEST_CASE("divisor sum of mobius is the unit, exhaustively to 10^4") {
  const SieveTables t = build_sieve(10'000);
  std::vector<int> sums(10'001, 0);
  for (std::uint64_t d = 1; d <= 10'000; ++d) {
    for (std::uint64_t n = d; n <= 10'000; n += d) sums[n] += t.mu(d);
  }
  for (std::uint64_t n = 1; n <= 10'000; ++n) CHECK(sums[n] == unit_I(n));
}

TEST_CASE("kappa-free numbers satisfy Omega <= kappa * omega") {
  const SieveTables t = build_sieve(100'000);
  for (const unsigned kappa : {2u, 3u, 5u}) {
    for (std::uint64_t n = 1; n <= 100'000; ++n) {
      if (!is_kappa_free(n, kappa, t)) continue;
      CHECK(t.big_omega(n) <= kappa * t.small_omega(n));
    }
  }
}

TEST_CASE("iterated_log clamps at one") {
  CHECK(iterated_log(1.0, 1) == 1.0);
  CHECK(iterated_log(2.0, 2) == 1.0);
  CHECK(iterated_log(1e6, 1) == doctest::Approx(std::log(1e6)));
  CHECK(iterated_log(1e6, 2) == doctest::Approx(std::log(std::log(1e6))));
  CHECK(iterated_log(1e6, 3) == 1.0);  // log log log 1e6 < 1
  CHECK(iterated_log(1e30, 3) == doctest::Approx(std::log(std::log(std::log(1e30)))));
}
