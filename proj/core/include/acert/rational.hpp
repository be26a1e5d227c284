#ifndef ACERT_RATIONAL_HPP
#define ACERT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace acert {

// Exact arithmetic everywhere: the engine never rounds.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

inline Int factorial(unsigned n) {
  Int f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Int binomial(const Int& n, unsigned k) {
  // n may be any integer (generalized binomial over the integers).
  Rational b = 1;
  for (unsigned i = 0; i < k; ++i) b *= Rational(n - i, i + 1);
  if (denominator(b) != 1) throw std::logic_error("binomial: non-integral result");
  return numerator(b);
}

inline Int pow_int(Int base, unsigned e) {
  Int r = 1;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace acert

#endif
