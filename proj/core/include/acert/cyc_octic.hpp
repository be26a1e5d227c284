#ifndef ACERT_CYC_OCTIC_HPP
#define ACERT_CYC_OCTIC_HPP

#include <array>
#include <ostream>

#include "acert/rational.hpp"

namespace acert {

// Element of Q(zeta_8): a + b*z + c*z^2 + d*z^3 with z^4 = -1.
// Unique representation, so equality is componentwise.
class CycOctic {
 public:
  CycOctic() : c_{} {}
  CycOctic(const Rational& a) : c_{} { c_[0] = a; }
  CycOctic(long a) : c_{} { c_[0] = a; }
  CycOctic(const Rational& a, const Rational& b, const Rational& c, const Rational& d)
      : c_{a, b, c, d} {}

  static CycOctic zeta() { return CycOctic(0, 1, 0, 0); }
  static CycOctic zeta_pow(unsigned e);

  const Rational& coeff(unsigned i) const { return c_[i]; }
  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  CycOctic& operator+=(const CycOctic& o);
  CycOctic& operator-=(const CycOctic& o);
  CycOctic& operator*=(const CycOctic& o);
  CycOctic operator-() const;

  friend CycOctic operator+(CycOctic a, const CycOctic& b) { return a += b; }
  friend CycOctic operator-(CycOctic a, const CycOctic& b) { return a -= b; }
  friend CycOctic operator*(CycOctic a, const CycOctic& b) { return a *= b; }
  friend bool operator==(const CycOctic& a, const CycOctic& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CycOctic& a, const CycOctic& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const CycOctic& x);

 private:
  std::array<Rational, 4> c_;
};

}  // namespace acert

#endif
