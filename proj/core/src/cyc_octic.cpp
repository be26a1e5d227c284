#include "acert/cyc_octic.hpp"

namespace acert {

CycOctic CycOctic::zeta_pow(unsigned e) {
  e %= 8;
  CycOctic r;
  Rational sign = (e >= 4) ? -1 : 1;
  r.c_[e % 4] = sign;
  return r;
}

CycOctic& CycOctic::operator+=(const CycOctic& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

CycOctic& CycOctic::operator-=(const CycOctic& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

CycOctic& CycOctic::operator*=(const CycOctic& o) {
  std::array<Rational, 4> r{};
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (o.c_[j] == 0) continue;
      int k = i + j;
      Rational p = c_[i] * o.c_[j];
      if (k >= 4) {
        r[k - 4] -= p;  // z^4 = -1
      } else {
        r[k] += p;
      }
    }
  }
  c_ = r;
  return *this;
}

CycOctic CycOctic::operator-() const {
  CycOctic r;
  for (int i = 0; i < 4; ++i) r.c_[i] = -c_[i];
  return r;
}

std::ostream& operator<<(std::ostream& os, const CycOctic& x) {
  os << "(" << x.c_[0] << " + " << x.c_[1] << "*z + " << x.c_[2] << "*z^2 + " << x.c_[3]
     << "*z^3)";
  return os;
}

}  // namespace acert
