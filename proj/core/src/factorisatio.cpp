#include "zfree/factorisatio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "zfree/error.hpp"

namespace zfree {

void FactorisationTables::check(std::uint64_t n) const {
  if (n == 0 || n > limit_) {
    throw RangeError("n = " + std::to_string(n) + " outside factorisation range 1.." +
                     std::to_string(limit_));
  }
}

std::uint64_t FactorisationTables::f(std::uint64_t n) const {
  check(n);
  return f_[n];
}

std::uint64_t FactorisationTables::fk(unsigned k, std::uint64_t n) const {
  check(n);
  if (k == 0) return n == 1 ? 1 : 0;
  if (k <= max_k_) return fk_[k - 1][n];
  if (k > max_omega_) return 0;
  throw RangeError("f_" + std::to_string(k) + " not stored (table truncated at k = " +
                   std::to_string(max_k_) + ")");
}

std::uint64_t FactorisationTables::f_even(std::uint64_t n) const {
  check(n);
  return f_even_[n];
}

std::uint64_t FactorisationTables::f_odd(std::uint64_t n) const {
  check(n);
  return f_odd_[n];
}

FactorisationTables build_factorisation_tables(const SieveTables& sieve, std::uint64_t limit,
                                               std::optional<unsigned> max_k) {
  if (limit == 0) throw CapacityError("factorisation limit must be >= 1");
  if (limit > sieve.limit()) throw RangeError("factorisation limit exceeds sieve limit");

  unsigned max_omega = 0;
  for (std::uint64_t n = 2; n <= limit; ++n) max_omega = std::max(max_omega, sieve.big_omega(n));
  const unsigned rows = max_k.value_or(max_omega);

  const std::size_t size = static_cast<std::size_t>(limit) + 1;
  require_budget(size * sizeof(std::uint64_t) * (3 + rows), "factorisation tables");

  FactorisationTables t;
  t.limit_ = limit;
  t.max_omega_ = max_omega;
  t.max_k_ = std::min(rows, max_omega);
  t.truncated_ = rows < max_omega;

  t.f_.assign(size, 0);
  t.f_even_.assign(size, 0);
  t.f_odd_.assign(size, 0);
  t.f_[1] = 1;
  t.f_even_[1] = 1;
  // Appending a factor d >= 2 to a factorization of n gives one of n*d and
  // flips the length parity; processing n in increasing order means every
  // f(n) is final before it is pushed forward.
  for (std::uint64_t n = 1; n <= limit / 2; ++n) {
    const std::uint64_t fn = t.f_[n];
    const std::uint64_t even = t.f_even_[n];
    const std::uint64_t odd = t.f_odd_[n];
    for (std::uint64_t m = 2 * n; m <= limit; m += n) {
      t.f_[m] = checked_add(t.f_[m], fn, "f(n)");
      t.f_even_[m] = checked_add(t.f_even_[m], odd, "f_even(n)");
      t.f_odd_[m] = checked_add(t.f_odd_[m], even, "f_odd(n)");
    }
  }

  t.fk_.resize(t.max_k_);
  for (unsigned k = 1; k <= t.max_k_; ++k) {
    auto& row = t.fk_[k - 1];
    row.assign(size, 0);
    if (k == 1) {
      std::fill(row.begin() + 2, row.end(), 1);
      continue;
    }
    const auto& prev = t.fk_[k - 2];
    for (std::uint64_t n = 2; n <= limit / 2; ++n) {
      const std::uint64_t v = prev[n];
      if (v == 0) continue;
      for (std::uint64_t m = 2 * n; m <= limit; m += n) {
        row[m] = checked_add(row[m], v, "f_k(n)");
      }
    }
  }
  return t;
}

int mu_via_parity(std::uint64_t n, const FactorisationTables& tables) {
  const auto even = static_cast<std::int64_t>(tables.f_even(n));
  const auto odd = static_cast<std::int64_t>(tables.f_odd(n));
  return static_cast<int>(even - odd);
}

PartitionMultiset::PartitionMultiset(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end());
  for (const unsigned k : parts_) {
    if (k == 0) throw DomainError("partition parts must be positive");
    ell_ += k;
    if (!mults_.empty() && mults_.back().first == k) {
      ++mults_.back().second;
    } else {
      mults_.emplace_back(k, 1);
    }
  }
  if (parts_.empty()) throw DomainError("partition must have at least one part");
}

namespace {

void partitions_from(unsigned remaining, unsigned min_part, std::vector<unsigned>& parts,
                     const std::function<void(const PartitionMultiset&)>& visit) {
  if (remaining == 0) {
    visit(PartitionMultiset(parts));
    return;
  }
  for (unsigned k = min_part; k <= remaining; ++k) {
    // the last part must be able to absorb the remainder
    if (remaining - k != 0 && remaining - k < k) continue;
    parts.push_back(k);
    partitions_from(remaining - k, k, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

void for_each_partition(unsigned ell,
                        const std::function<void(const PartitionMultiset&)>& visit) {
  if (ell == 0 || ell > kMaxPartitionEll) {
    throw RangeError("partition size must be in 1.." + std::to_string(kMaxPartitionEll));
  }
  std::vector<unsigned> parts;
  parts.reserve(ell);
  partitions_from(ell, 1, parts, visit);
}

std::vector<PartitionMultiset> enumerate_partitions(unsigned ell) {
  std::vector<PartitionMultiset> out;
  for_each_partition(ell, [&](const PartitionMultiset& p) { out.push_back(p); });
  return out;
}

namespace {

// Memoized count over (remaining exponent vector, remaining part counts).
class DLambdaCounter {
 public:
  DLambdaCounter(std::vector<unsigned> parts_by_k) : part_values_(std::move(parts_by_k)) {}

  std::uint64_t count(std::vector<unsigned>& exps, std::vector<unsigned>& remaining_parts) {
    bool parts_left = false;
    for (const unsigned c : remaining_parts) parts_left |= c != 0;
    if (!parts_left) {
      return std::all_of(exps.begin(), exps.end(), [](unsigned e) { return e == 0; }) ? 1 : 0;
    }

    std::vector<unsigned> key = exps;
    key.insert(key.end(), remaining_parts.begin(), remaining_parts.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::uint64_t total = 0;
    std::vector<unsigned> divisor(exps.size(), 0);
    for (std::size_t slot = 0; slot < remaining_parts.size(); ++slot) {
      if (remaining_parts[slot] == 0) continue;
      --remaining_parts[slot];
      total = checked_add(total, divisors_with_omega(exps, divisor, 0, part_values_[slot],
                                                    remaining_parts),
                          "d_lambda");
      ++remaining_parts[slot];
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  // Chooses the next tuple entry: an exponent vector `divisor` <= exps with
  // component sum `omega`, then recurses on the cofactor.
  std::uint64_t divisors_with_omega(std::vector<unsigned>& exps, std::vector<unsigned>& divisor,
                                    std::size_t i, unsigned omega,
                                    std::vector<unsigned>& remaining_parts) {
    if (i == exps.size()) {
      if (omega != 0) return 0;
      std::vector<unsigned> rest(exps.size());
      for (std::size_t j = 0; j < exps.size(); ++j) rest[j] = exps[j] - divisor[j];
      return count(rest, remaining_parts);
    }
    std::uint64_t total = 0;
    for (unsigned e = 0; e <= std::min(exps[i], omega); ++e) {
      divisor[i] = e;
      total = checked_add(total,
                          divisors_with_omega(exps, divisor, i + 1, omega - e, remaining_parts),
                          "d_lambda");
    }
    divisor[i] = 0;
    return total;
  }

  std::vector<unsigned> part_values_;
  std::map<std::vector<unsigned>, std::uint64_t> memo_;
};

}  // namespace

std::uint64_t d_lambda(const FactoredInt& n, const PartitionMultiset& lambda) {
  if (n.big_omega() != lambda.ell()) {
    throw DomainError("d_lambda: Omega(n) = " + std::to_string(n.big_omega()) +
                      " but lambda partitions " + std::to_string(lambda.ell()));
  }
  std::vector<unsigned> exps;
  for (const auto& f : n.factors()) exps.push_back(f.exponent);
  std::vector<unsigned> values;
  std::vector<unsigned> counts;
  for (const auto& [k, m] : lambda.multiplicities()) {
    values.push_back(k);
    counts.push_back(m);
  }
  DLambdaCounter counter(std::move(values));
  return counter.count(exps, counts);
}

BigInt d_lambda_bound(const PartitionMultiset& lambda) {
  BigInt denominator = 1;
  BigInt mult_denominator = 1;
  for (const auto& [k, m] : lambda.multiplicities()) {
    const BigInt kf = factorial(k);
    for (unsigned i = 0; i < m; ++i) denominator *= kf;
    mult_denominator *= factorial(m);
  }
  return factorial(lambda.ell()) / denominator * (factorial(lambda.size()) / mult_denominator);
}

GrowthFit fit_factorisation_growth(const SieveTables& sieve, const FactorisationTables& tables) {
  GrowthFit fit;
  fit.constant = -std::numeric_limits<double>::infinity();
  for (std::uint64_t n = 2; n <= tables.limit(); ++n) {
    const double ell = sieve.big_omega(n);
    const double scale = ell * iterated_log(ell, 2) * iterated_log(ell, 3);
    const double excess = std::log(static_cast<double>(tables.f(n))) - ell * std::log(ell);
    const double c = excess / scale;
    if (c > fit.constant) {
      fit.constant = c;
      fit.argmax = n;
    }
  }
  return fit;
}

}  // namespace zfree
