#ifndef ACERT_QSERIES_HPP
#define ACERT_QSERIES_HPP

#include <map>
#include <ostream>

#include "acert/cyc_octic.hpp"
#include "acert/polynomial.hpp"

namespace acert {

// Truncated series in t = q^(1/8) whose coefficients are polynomials over a
// fixed ring. A q-order of n corresponds to t-exponent 8n; half-integer
// q-powers land on multiples of 4.
template <class C>
class QSeries {
 public:
  QSeries() = default;
  QSeries(RingPtr ring, int t_cap) : ring_(std::move(ring)), t_cap_(t_cap) {}

  static QSeries zero(RingPtr ring, int t_cap) { return QSeries(std::move(ring), t_cap); }

  static QSeries one(RingPtr ring, int t_cap) {
    QSeries s(ring, t_cap);
    s.set(0, Polynomial<C>::constant(ring, C(1)));
    return s;
  }

  static QSeries from_poly(int t_exp, Polynomial<C> p, int t_cap) {
    QSeries s(p.ring(), t_cap);
    s.set(t_exp, std::move(p));
    return s;
  }

  const RingPtr& ring() const { return ring_; }
  int t_cap() const { return t_cap_; }
  const std::map<int, Polynomial<C>>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  void set(int t_exp, Polynomial<C> p) {
    if (t_exp < 0) throw structural_error("negative t-exponent");
    if (t_exp > t_cap_ || p.is_zero()) return;
    entries_.insert_or_assign(t_exp, std::move(p));
  }

  void add_entry(int t_exp, const Polynomial<C>& p) {
    if (t_exp < 0) throw structural_error("negative t-exponent");
    if (t_exp > t_cap_ || p.is_zero()) return;
    auto it = entries_.find(t_exp);
    if (it == entries_.end()) {
      entries_.emplace(t_exp, p);
    } else {
      it->second += p;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  Polynomial<C> coefficient(int t_exp) const {
    auto it = entries_.find(t_exp);
    return it == entries_.end() ? Polynomial<C>::zero(ring_) : it->second;
  }
  Polynomial<C> q_coefficient(int n) const { return coefficient(8 * n); }

  int min_t() const {
    return entries_.empty() ? t_cap_ + 1 : entries_.begin()->first;
  }

  // All t-exponents divisible by 8, i.e. the series lives in integer q-powers.
  bool is_integral() const {
    for (const auto& [e, p] : entries_)
      if (e % 8 != 0) return false;
    return true;
  }

  void check_same(const QSeries& o) const {
    check_compatible(ring_, o.ring_);
    if (t_cap_ != o.t_cap_) throw structural_error("t-cap mismatch");
  }

  QSeries& operator+=(const QSeries& o) {
    check_same(o);
    for (const auto& [e, p] : o.entries_) add_entry(e, p);
    return *this;
  }
  QSeries& operator-=(const QSeries& o) {
    check_same(o);
    for (const auto& [e, p] : o.entries_) add_entry(e, -p);
    return *this;
  }
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    a.check_same(b);
    QSeries r(a.ring_, a.t_cap_);
    for (const auto& [ea, pa] : a.entries_) {
      for (const auto& [eb, pb] : b.entries_) {
        if (ea + eb > a.t_cap_) break;
        r.add_entry(ea + eb, pa * pb);
      }
    }
    return r;
  }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  QSeries scaled(const C& s) const {
    QSeries r(ring_, t_cap_);
    for (const auto& [e, p] : entries_) r.set(e, p.scaled(s));
    return r;
  }

  QSeries scaled_poly(const Polynomial<C>& f) const {
    QSeries r(ring_, t_cap_);
    for (const auto& [e, p] : entries_) r.add_entry(e, p * f);
    return r;
  }

  // Multiply by t^delta (delta >= 0) or divide (delta < 0; errors if any
  // exponent would go negative).
  QSeries shifted(int delta) const {
    QSeries r(ring_, t_cap_);
    for (const auto& [e, p] : entries_) {
      if (e + delta < 0)
        throw singular_division_error("t-shift below zero");
      r.set(e + delta, p);
    }
    return r;
  }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    a.check_same(b);
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const QSeries& s) {
    if (s.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [e, p] : s.entries_) {
      if (!first) os << " + ";
      first = false;
      os << "t^" << e << "*(" << p << ")";
    }
    return os;
  }

 private:
  RingPtr ring_;
  int t_cap_ = 0;
  std::map<int, Polynomial<C>> entries_;
};

using FormQSeries = QSeries<Rational>;

// Inverse of a unit series: requires a nonzero rational constant at (t^0,
// degree 0). Newton iteration; exact in the truncated ring.
inline FormQSeries series_invert(const FormQSeries& f) {
  Rational c = f.coefficient(0).constant_term();
  if (c == 0) throw singular_division_error("series_invert: leading coefficient not a unit");
  FormQSeries g = FormQSeries::one(f.ring(), f.t_cap()).scaled(Rational(1) / c);
  FormQSeries two = FormQSeries::one(f.ring(), f.t_cap()).scaled(Rational(2));
  const FormQSeries one = FormQSeries::one(f.ring(), f.t_cap());
  for (int it = 0; it < 24; ++it) {
    FormQSeries fg = f * g;
    if (fg == one) return g;
    g = g * (two - fg);
  }
  throw singular_division_error("series_invert: no convergence (non-nilpotent tail?)");
}

// f = t^offset * (unit); returns the offset-stripped inverse of the unit
// part, i.e. g with f * g = t^offset up to truncation.
inline FormQSeries series_invert_unit(const FormQSeries& f, int offset) {
  return series_invert(f.shifted(-offset));
}

// num / den where both carry the same t-offset of den; result has offset 0
// relative to num-den cancellation.
inline FormQSeries series_divide(const FormQSeries& num, const FormQSeries& den) {
  int a = den.min_t();
  if (a > den.t_cap()) throw singular_division_error("series_divide: zero denominator");
  return num.shifted(-a) * series_invert(den.shifted(-a));
}

inline FormQSeries series_exp(const FormQSeries& f) {
  if (!(f.coefficient(0).constant_term() == 0))
    throw std::domain_error("series_exp: constant term must vanish");
  FormQSeries r = FormQSeries::one(f.ring(), f.t_cap());
  FormQSeries term = r;
  for (long k = 1;; ++k) {
    term = term * f;
    if (term.is_zero()) break;
    term = term.scaled(Rational(1, k));
    r += term;
  }
  return r;
}

inline FormQSeries series_log(const FormQSeries& f) {
  if (!(f.coefficient(0).constant_term() == 1))
    throw std::domain_error("series_log: constant term must be 1");
  FormQSeries u = f - FormQSeries::one(f.ring(), f.t_cap());
  FormQSeries r = FormQSeries::zero(f.ring(), f.t_cap());
  FormQSeries term = FormQSeries::one(f.ring(), f.t_cap());
  for (long k = 1;; ++k) {
    term = term * u;
    if (term.is_zero()) break;
    Rational sign = (k % 2 == 1) ? 1 : -1;
    r += term.scaled(sign / Rational(k));
  }
  return r;
}

}  // namespace acert

#endif
