#ifndef ACERT_POLYNOMIAL_HPP
#define ACERT_POLYNOMIAL_HPP

#include <map>
#include <ostream>
#include <vector>

#include "acert/rational.hpp"
#include "acert/ring.hpp"

namespace acert {

// Sparse polynomial in the graded nilpotent generators of a PolyRing,
// truncated at the ring's cohomological degree cap. No zero coefficients are
// stored and the term order is canonical, so equality is structural.
template <class C>
class Polynomial {
 public:
  using TermMap = std::map<Monomial, C>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(RingPtr ring, const C& c) {
    Polynomial p(std::move(ring));
    if (!(c == C(0))) p.terms_.emplace(Monomial{}, c);
    return p;
  }

  static Polynomial generator(RingPtr ring, std::size_t idx, unsigned exp = 1) {
    Polynomial p(ring);
    Monomial m;
    m.e[idx] = static_cast<std::uint8_t>(exp);
    if (ring->monomial_degree(m) <= ring->degree_cap()) p.terms_.emplace(m, C(1));
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  C constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(const Monomial& m, const C& c) {
    if (c == C(0)) return;
    if (ring_->monomial_degree(m) > ring_->degree_cap()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == C(0)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(ring_, o.ring_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(ring_, o.ring_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_compatible(a.ring_, b.ring_);
    const PolyRing& R = *a.ring_;
    const int cap = R.degree_cap();
    Polynomial r(a.ring_);
    struct Entry {
      const Monomial* m;
      const C* c;
      int deg;
    };
    std::vector<Entry> bd;
    bd.reserve(b.terms_.size());
    for (const auto& [m, c] : b.terms_) bd.push_back({&m, &c, R.monomial_degree(m)});
    for (const auto& [ma, ca] : a.terms_) {
      const int da = R.monomial_degree(ma);
      for (const auto& eb : bd) {
        if (da + eb.deg > cap) continue;
        Monomial m = ma;
        for (std::size_t i = 0; i < R.size(); ++i)
          m.e[i] = static_cast<std::uint8_t>(m.e[i] + eb.m->e[i]);
        C prod = ca * *eb.c;
        auto [rit, inserted] = r.terms_.emplace(m, prod);
        if (!inserted) {
          rit->second += prod;
          if (rit->second == C(0)) r.terms_.erase(rit);
        }
      }
    }
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const C& s) const {
    Polynomial r(ring_);
    if (s == C(0)) return r;
    for (const auto& [m, c] : terms_) {
      C v = c * s;
      if (!(v == C(0))) r.terms_.emplace(m, v);
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    check_compatible(a.ring_, b.ring_);
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Sum of exactly the degree-d monomials.
  Polynomial degree_component(int d) const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_)
      if (ring_->monomial_degree(m) == d) r.terms_.emplace(m, c);
    return r;
  }

  int max_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, ring_->monomial_degree(m));
    return d;
  }

  bool is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
      if (ring_->monomial_degree(m) != d) return false;
    return true;
  }

  // Replace generator idx by repl (same ring).
  Polynomial substituted(std::size_t idx, const Polynomial& repl) const {
    check_compatible(ring_, repl.ring_);
    Polynomial r(ring_);
    std::vector<Polynomial> powers{Polynomial::constant(ring_, C(1))};
    for (const auto& [m, c] : terms_) {
      unsigned k = m.e[idx];
      while (powers.size() <= k) powers.push_back(powers.back() * repl);
      Monomial rest = m;
      rest.e[idx] = 0;
      Polynomial base(ring_);
      base.terms_.emplace(rest, c);
      r += base * powers[k];
    }
    return r;
  }

  // Exact evaluation at the given generator values.
  C evaluate(const std::vector<C>& values) const {
    C total(0);
    for (const auto& [m, c] : terms_) {
      C v = c;
      for (std::size_t i = 0; i < ring_->size(); ++i)
        for (unsigned k = 0; k < m.e[i]; ++k) v *= values[i];
      total += v;
    }
    return total;
  }

  // Re-express in a ring whose generator set contains this one's (by name).
  Polynomial mapped_into(const RingPtr& super) const {
    std::vector<int> where(ring_->size());
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      int j = super->find(ring_->gen(i).name);
      if (j < 0) throw structural_error("mapped_into: generator missing in target ring");
      where[i] = j;
    }
    Polynomial r(super);
    for (const auto& [m, c] : terms_) {
      Monomial t;
      for (std::size_t i = 0; i < ring_->size(); ++i) t.e[where[i]] = m.e[i];
      if (super->monomial_degree(t) <= super->degree_cap()) r.terms_.emplace(t, c);
    }
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [m, c] : p.terms_) {
      if (!first) os << " + ";
      first = false;
      os << c;
      for (std::size_t i = 0; i < p.ring_->size(); ++i)
        if (m.e[i]) {
          os << "*" << p.ring_->gen(i).name;
          if (m.e[i] > 1) os << "^" << int(m.e[i]);
        }
    }
    return os;
  }

 private:
  RingPtr ring_;
  TermMap terms_;
};

using FormPolynomial = Polynomial<Rational>;

// exp of a nilpotent polynomial (zero constant term required).
template <class C>
Polynomial<C> poly_exp(const Polynomial<C>& f) {
  if (!(f.constant_term() == C(0)))
    throw std::domain_error("poly_exp: nonzero constant term");
  Polynomial<C> r = Polynomial<C>::constant(f.ring(), C(1));
  Polynomial<C> term = r;
  for (long k = 1;; ++k) {
    term = term * f;
    if (term.is_zero()) break;
    term = term.scaled(C(1) / C(k));
    r += term;
  }
  return r;
}

}  // namespace acert

#endif
