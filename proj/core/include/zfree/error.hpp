#ifndef ZFREE_ERROR_HPP
#define ZFREE_ERROR_HPP

#include <concepts>
#include <stdexcept>
#include <string>

namespace zfree {

// Table or integer width would be exceeded (memory budget, count overflow).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument violates a mathematical precondition (F(1) = 0, p | n, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Index outside the range covered by a table.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

template <std::integral T>
[[nodiscard]] T checked_add(T a, T b, const char* what = "addition") {
  T r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw CapacityError(std::string("integer overflow in ") + what);
  }
  return r;
}

template <std::integral T>
[[nodiscard]] T checked_sub(T a, T b, const char* what = "subtraction") {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw CapacityError(std::string("integer overflow in ") + what);
  }
  return r;
}

template <std::integral T>
[[nodiscard]] T checked_mul(T a, T b, const char* what = "multiplication") {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw CapacityError(std::string("integer overflow in ") + what);
  }
  return r;
}

}  // namespace zfree

#endif  // ZFREE_ERROR_HPP
