#include <doctest.h>

#include <cmath>

#include "oracles/oracles.hpp"
#include "zfree/error.hpp"
#include "zfree/factorisatio.hpp"

using namespace zfree;

namespace {

const SieveTables& sieve() {
  static const SieveTables t = build_sieve(1'000'000);
  return t;
}

const FactorisationTables& small_tables() {
  static const FactorisationTables t = build_factorisation_tables(sieve(), 3000);
  return t;
}

}  // namespace

TEST_CASE("f and f_k examples (brute-force oracle)") {
  const auto& t = small_tables();
  const auto counts12 = oracle::factorization_counts_by_length(12);
  std::uint64_t total12 = 0;
  for (const auto c : counts12) total12 += c;
  REQUIRE(total12 == 8);
  REQUIRE(counts12[2] == 4);
  CHECK(t.f(12) == 8);
  CHECK(t.fk(2, 12) == 4);
  CHECK(t.f(30) == oracle::fubini(3));
  CHECK(t.f(30) == 13);
  CHECK(t.f(1) == 1);
  CHECK(t.f_even(12) == 4);
  CHECK(t.f_odd(12) == 4);
}

TEST_CASE("tables agree with tuple enumeration for n <= 3000") {
  const auto& t = small_tables();
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    const auto counts = oracle::factorization_counts_by_length(n);
    std::uint64_t total = n == 1 ? 1 : 0;
    std::uint64_t even = n == 1 ? 1 : 0;
    std::uint64_t odd = 0;
    for (std::size_t k = 1; k < counts.size(); ++k) {
      total += counts[k];
      (k % 2 == 0 ? even : odd) += counts[k];
      if (k <= 6) CHECK(t.fk(static_cast<unsigned>(k), n) == counts[k]);
    }
    REQUIRE(t.f(n) == total);
    CHECK(t.f_even(n) == even);
    CHECK(t.f_odd(n) == odd);
  }
}

TEST_CASE("table invariants") {
  const auto& t = small_tables();
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    std::uint64_t total = unit_I(n);
    for (unsigned k = 1; k <= t.max_k(); ++k) total += t.fk(k, n);
    CHECK(total == t.f(n));
    CHECK(t.f(n) == t.f_even(n) + t.f_odd(n));
    CHECK(t.fk(sieve().big_omega(n) + 1, n) == 0);
  }
}

TEST_CASE("squarefree f equals the ordered Bell number") {
  const auto& t = small_tables();
  for (std::uint64_t n = 2; n <= 3000; ++n) {
    if (sieve().mu(n) == 0) continue;
    CHECK(t.f(n) == oracle::fubini(sieve().small_omega(n)));
  }
}

TEST_CASE("truncated tables refuse rows they do not hold") {
  const auto t = build_factorisation_tables(sieve(), 1000, 2);
  CHECK(t.truncated());
  CHECK(t.fk(2, 12) == 4);
  CHECK_THROWS_AS((void)t.fk(3, 12), RangeError);
  CHECK(t.fk(30, 12) == 0);  // beyond every Omega(n) in range
  CHECK(t.f(12) == 8);
  CHECK_THROWS_AS((void)t.f(1001), RangeError);
}

TEST_CASE("mu_via_parity") {
  const auto t = build_factorisation_tables(sieve(), 100'000, 0);
  CHECK(mu_via_parity(12, t) == 0);
  CHECK(mu_via_parity(1, t) == 1);
  CHECK(mu_via_parity(30, t) == -1);
  for (std::uint64_t n = 1; n <= 100'000; ++n) REQUIRE(mu_via_parity(n, t) == sieve().mu(n));
}

TEST_CASE("partitions") {
  const auto p3 = enumerate_partitions(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0].parts() == std::vector<unsigned>{1, 1, 1});
  CHECK(p3[1].parts() == std::vector<unsigned>{1, 2});
  CHECK(p3[2].parts() == std::vector<unsigned>{3});
  CHECK(enumerate_partitions(5).size() == 7);

  std::uint64_t count50 = 0;
  for_each_partition(50, [&](const PartitionMultiset& p) {
    ++count50;
    unsigned sum = 0;
    unsigned parts = 0;
    for (const auto& [k, m] : p.multiplicities()) {
      sum += k * m;
      parts += m;
    }
    REQUIRE(sum == 50);
    REQUIRE(parts == p.size());
  });
  CHECK(count50 == oracle::partition_count(50));
  CHECK(count50 == 204226);

  for (unsigned ell = 1; ell <= 25; ++ell) {
    CHECK(enumerate_partitions(ell).size() == oracle::partition_count(ell));
  }
  CHECK_THROWS_AS((void)enumerate_partitions(0), RangeError);
  CHECK_THROWS_AS((void)enumerate_partitions(91), RangeError);
}

TEST_CASE("PartitionMultiset multiplicities") {
  const PartitionMultiset p({3, 1, 1, 2, 3});
  CHECK(p.ell() == 10);
  CHECK(p.size() == 5);
  CHECK(p.parts() == std::vector<unsigned>{1, 1, 2, 3, 3});
  CHECK(p.multiplicities() ==
        std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {2, 1}, {3, 2}});
  CHECK_THROWS_AS(PartitionMultiset({0, 2}), DomainError);
}

TEST_CASE("d_lambda examples") {
  const auto& s = sieve();
  CHECK(d_lambda(factorize(30, s), PartitionMultiset({1, 2})) == 6);
  CHECK(d_lambda(factorize(30, s), PartitionMultiset({1, 1, 1})) == 6);
  CHECK(d_lambda(factorize(4, s), PartitionMultiset({1, 1})) == 1);
  CHECK(oracle::d_lambda(30, {1, 2}) == 6);
  CHECK_THROWS_AS((void)d_lambda(factorize(30, s), PartitionMultiset({1, 1})), DomainError);
}

TEST_CASE("d_lambda_bound examples") {
  CHECK(d_lambda_bound(PartitionMultiset({1, 2})) == 6);
  CHECK(d_lambda_bound(PartitionMultiset({7})) == 1);
  CHECK(d_lambda_bound(PartitionMultiset({1, 1, 1})) == 6);
  // 90 ones: 90! * 90! / 90! = 90!
  CHECK(d_lambda_bound(PartitionMultiset(std::vector<unsigned>(90, 1))) == factorial(90));
}

TEST_CASE("d_lambda agrees with enumeration and decomposes f") {
  const auto& s = sieve();
  const auto& t = small_tables();
  for (std::uint64_t n = 2; n <= 400; ++n) {
    const FactoredInt fn = factorize(n, s);
    std::uint64_t total = 0;
    for (const auto& lambda : enumerate_partitions(fn.big_omega())) {
      const std::uint64_t d = d_lambda(fn, lambda);
      CHECK(d == oracle::d_lambda(n, lambda.parts()));
      total += d;
    }
    CHECK(total == t.f(n));
  }
}

TEST_CASE("factorisation growth fit is finite and dominates every n") {
  const auto t = build_factorisation_tables(sieve(), 1'000'000, 0);
  const GrowthFit fit = fit_factorisation_growth(sieve(), t);
  CHECK(std::isfinite(fit.constant));
  std::uint64_t violations = 0;
  for (std::uint64_t n = 2; n <= 1'000'000; ++n) {
    const double ell = sieve().big_omega(n);
    const double bound = ell * std::log(ell) +
                         fit.constant * ell * iterated_log(ell, 2) * iterated_log(ell, 3);
    if (std::log(static_cast<double>(t.f(n))) > bound + 1e-12) ++violations;
  }
  CHECK(violations == 0);
  MESSAGE("fitted growth constant c = " << fit.constant << " (attained at n = " << fit.argmax
                                        << ")");
}

TEST_CASE("d_lambda never exceeds the combinatorial bound, with equality on squarefree n") {
  const auto& s = sieve();
  std::uint64_t violations = 0;
  for (std::uint64_t n = 2; n <= 3000; ++n) {
    const FactoredInt fn = factorize(n, s);
    for (const auto& lambda : enumerate_partitions(fn.big_omega())) {
      const BigInt d = d_lambda(fn, lambda);
      const BigInt bound = d_lambda_bound(lambda);
      if (d > bound || (fn.is_squarefree() && d != bound)) ++violations;
    }
  }
  CHECK(violations == 0);
}
