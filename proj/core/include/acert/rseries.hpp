#ifndef ACERT_RSERIES_HPP
#define ACERT_RSERIES_HPP

#include <vector>

#include "acert/rational.hpp"

namespace acert {

// Dense univariate truncated power series with exact rational coefficients.
// Coefficient i is the coefficient of x^i; all series share an explicit order
// (number of retained coefficients). Used for scalar q-expansions and for the
// coefficient extraction behind the power-sum backend.
class RSeries {
 public:
  RSeries() : c_(1) {}
  explicit RSeries(std::size_t order) : c_(order) {}
  RSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

  std::size_t order() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  static RSeries one(std::size_t order);
  static RSeries monomial(std::size_t order, std::size_t k, const Rational& c);

  RSeries& operator+=(const RSeries& o);
  RSeries& operator-=(const RSeries& o);
  friend RSeries operator+(RSeries a, const RSeries& b) { return a += b; }
  friend RSeries operator-(RSeries a, const RSeries& b) { return a -= b; }
  friend RSeries operator*(const RSeries& a, const RSeries& b);
  RSeries& operator*=(const RSeries& o) { return *this = *this * o; }
  friend bool operator==(const RSeries& a, const RSeries& b) { return a.c_ == b.c_; }

  RSeries scaled(const Rational& s) const;
  RSeries pow(unsigned e) const;
  // Requires a nonzero constant term.
  RSeries inverse() const;
  // exp: requires zero constant term. log: requires constant term one.
  RSeries exp() const;
  RSeries log() const;

 private:
  std::vector<Rational> c_;
};

// prod_{n=1}^{inf} (1 - q^n), truncated.
RSeries euler_product(std::size_t order);

}  // namespace acert

#endif
