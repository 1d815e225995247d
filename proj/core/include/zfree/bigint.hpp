#ifndef ZFREE_BIGINT_HPP
#define ZFREE_BIGINT_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace zfree {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::rational<BigInt>;

BigInt factorial(unsigned n);

// C(n, k) for signed arguments; zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

// Same as binomial() but in checked 64-bit arithmetic.
std::int64_t binomial_i64(std::int64_t n, std::int64_t k);

}  // namespace zfree

#endif  // ZFREE_BIGINT_HPP
