#include "acert/rseries.hpp"

#include <stdexcept>

namespace acert {

RSeries RSeries::one(std::size_t order) {
  RSeries r(order);
  r.c_[0] = 1;
  return r;
}

RSeries RSeries::monomial(std::size_t order, std::size_t k, const Rational& c) {
  RSeries r(order);
  if (k < order) r.c_[k] = c;
  return r;
}

RSeries& RSeries::operator+=(const RSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("RSeries: order mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

RSeries& RSeries::operator-=(const RSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("RSeries: order mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

RSeries operator*(const RSeries& a, const RSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("RSeries: order mismatch");
  RSeries r(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < b.order(); ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

RSeries RSeries::scaled(const Rational& s) const {
  RSeries r(*this);
  for (auto& c : r.c_) c *= s;
  return r;
}

RSeries RSeries::pow(unsigned e) const {
  RSeries r = one(order());
  RSeries base = *this;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

RSeries RSeries::inverse() const {
  if (c_[0] == 0) throw std::domain_error("RSeries::inverse: zero constant term");
  RSeries r(order());
  r.c_[0] = Rational(1) / c_[0];
  for (std::size_t n = 1; n < order(); ++n) {
    Rational s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += c_[k] * r.c_[n - k];
    r.c_[n] = -s / c_[0];
  }
  return r;
}

RSeries RSeries::exp() const {
  if (c_[0] != 0) throw std::domain_error("RSeries::exp: nonzero constant term");
  RSeries r = one(order());
  RSeries term = one(order());
  for (std::size_t k = 1; k < order(); ++k) {
    term = term * *this;
    term = term.scaled(Rational(1, static_cast<long>(k)));
    r += term;
  }
  return r;
}

RSeries RSeries::log() const {
  if (c_[0] != 1) throw std::domain_error("RSeries::log: constant term must be 1");
  RSeries u = *this;
  u.c_[0] = 0;
  RSeries r(order());
  RSeries term = one(order());
  for (std::size_t k = 1; k < order(); ++k) {
    term = term * u;
    Rational sign = (k % 2 == 1) ? 1 : -1;
    r += term.scaled(sign / Rational(static_cast<long>(k)));
  }
  return r;
}

RSeries euler_product(std::size_t order) {
  RSeries r = RSeries::one(order);
  for (std::size_t n = 1; n < order; ++n) {
    RSeries f = RSeries::one(order);
    f[n] = -1;
    r *= f;
  }
  return r;
}

}  // namespace acert
