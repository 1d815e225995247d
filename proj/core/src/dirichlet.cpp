#include "zfree/dirichlet.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace zfree {

std::function<bool(std::uint64_t)> kappa_free_predicate(const SieveTables& sieve,
                                                        unsigned kappa) {
  if (kappa < 2) throw DomainError("kappa must be >= 2");
  return [&sieve, kappa](std::uint64_t n) { return sieve.max_exponent(n) < kappa; };
}

std::function<bool(std::uint64_t)> squarefree_predicate(const SieveTables& sieve) {
  return [&sieve](std::uint64_t n) { return sieve.mu(n) != 0; };
}

namespace {

template <class T>
Complex series_eval_impl(const BasicArithFn<T>& f, ComplexPoint s) {
  const Complex minus_s = -s.value();
  Complex total{};
  for (std::uint64_t n = f.limit(); n >= 1; --n) {
    const Complex v(f(n));
    if (v == Complex{}) continue;
    total += v * std::exp(minus_s * std::log(static_cast<double>(n)));
  }
  return total;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Complex series_eval(const ArithFn& f, ComplexPoint s) { return series_eval_impl(f, s); }
Complex series_eval(const IntArithFn& f, ComplexPoint s) { return series_eval_impl(f, s); }

ArithFn to_complex(const IntArithFn& f) {
  return ArithFn(f.limit(), [&](std::uint64_t n) { return Complex(static_cast<double>(f(n))); });
}

bool is_integer_valued(const ArithFn& f) {
  constexpr double kBound = 9.2e18;
  for (const Complex v : f.values()) {
    if (v.imag() != 0.0 || std::floor(v.real()) != v.real() || std::fabs(v.real()) > kBound) {
      return false;
    }
  }
  return true;
}

IntArithFn to_integer(const ArithFn& f) {
  if (!is_integer_valued(f)) throw DomainError("arithmetic function is not integer-valued");
  return IntArithFn(f.limit(),
                    [&](std::uint64_t n) { return static_cast<std::int64_t>(f(n).real()); });
}

double max_abs(const ArithFn& f) {
  double m = 0.0;
  for (const Complex v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

void write_arith_csv(std::ostream& out, const ArithFn& f) {
  for (std::uint64_t n = 1; n <= f.limit(); ++n) {
    out << n << ',' << format_double(f(n).real()) << ',' << format_double(f(n).imag()) << '\n';
  }
}

void write_arith_csv(std::ostream& out, const IntArithFn& f) {
  for (std::uint64_t n = 1; n <= f.limit(); ++n) out << n << ',' << f(n) << ",0\n";
}

ArithFn read_arith_csv(std::istream& in) {
  std::vector<Complex> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line.rfind("n,", 0) == 0) continue;

    std::stringstream row(line);
    std::string n_text, re_text, im_text;
    std::getline(row, n_text, ',');
    std::getline(row, re_text, ',');
    std::getline(row, im_text, ',');
    std::uint64_t n = 0;
    const auto [ptr, ec] = std::from_chars(n_text.data(), n_text.data() + n_text.size(), n);
    if (ec != std::errc{} || ptr != n_text.data() + n_text.size() || re_text.empty()) {
      throw DomainError("arith csv line " + std::to_string(line_no) + ": expected n,re,im");
    }
    if (n != values.size() + 1) {
      throw DomainError("arith csv line " + std::to_string(line_no) + ": expected n = " +
                        std::to_string(values.size() + 1));
    }
    try {
      const double re = std::stod(re_text);
      const double im = im_text.empty() ? 0.0 : std::stod(im_text);
      values.emplace_back(re, im);
    } catch (const std::exception&) {
      throw DomainError("arith csv line " + std::to_string(line_no) + ": bad number");
    }
  }
  if (values.empty()) throw DomainError("arith csv: no rows");
  return ArithFn(values.size(), [&](std::uint64_t n) { return values[n - 1]; });
}

}  // namespace zfree
