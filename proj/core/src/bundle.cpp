#include "acert/bundle.hpp"

#include <algorithm>
#include <sstream>

#include "acert/errors.hpp"
#include "acert/rseries.hpp"

namespace acert {

namespace {

std::string atom_name(Atom a, bool reduced) {
  std::string s;
  switch (a.tag) {
    case AtomTag::TCZ: s = "TCZ"; break;
    case AtomTag::XiC: s = "XiC"; break;
    case AtomTag::VC: s = a.index == 1 ? "VC" : "VC2"; break;
    case AtomTag::DeltaV: s = a.index == 1 ? "D(V)" : "D(V2)"; break;
    case AtomTag::EC: s = "EC"; break;
    case AtomTag::DeltaE: s = "D(E)"; break;
  }
  if (reduced) s += "~";
  return s;
}

}  // namespace

std::string Prime::str() const {
  std::string base = atom_name(atom, reduced);
  switch (op) {
    case Op::Id: return base;
    case Op::Lambda: return "L" + std::to_string(k) + "(" + base + ")";
    case Op::Sym: return "S" + std::to_string(k) + "(" + base + ")";
  }
  return base;
}

BundleExpr BundleExpr::constant(const Int& n) {
  BundleExpr e;
  e.add_term({}, n);
  return e;
}

BundleExpr BundleExpr::atom(Atom a, bool reduced) {
  BundleExpr e;
  e.add_term({Prime{Prime::Op::Id, a, reduced, 1}}, 1);
  return e;
}

BundleExpr BundleExpr::lambda(Atom a, bool reduced, int k) {
  if (k < 0) throw std::domain_error("lambda: negative power");
  if (k == 0) return constant(1);
  if (k == 1) return atom(a, reduced);
  BundleExpr e;
  e.add_term({Prime{Prime::Op::Lambda, a, reduced, k}}, 1);
  return e;
}

BundleExpr BundleExpr::sym(Atom a, bool reduced, int k) {
  if (k < 0) throw std::domain_error("sym: negative power");
  if (k == 0) return constant(1);
  if (k == 1) return atom(a, reduced);
  BundleExpr e;
  e.add_term({Prime{Prime::Op::Sym, a, reduced, k}}, 1);
  return e;
}

void BundleExpr::add_term(const BundleMonomial& m, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BundleExpr& BundleExpr::operator+=(const BundleExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BundleExpr& BundleExpr::operator-=(const BundleExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BundleExpr BundleExpr::operator-() const {
  BundleExpr r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

BundleExpr BundleExpr::scaled(const Int& s) const {
  BundleExpr r;
  if (s == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

BundleExpr operator*(const BundleExpr& a, const BundleExpr& b) {
  BundleExpr r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      BundleMonomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

std::string BundleExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit_coeff = a == 1 && !m.empty();
    if (!unit_coeff) os << a.str();
    bool need_star = !unit_coeff;
    for (const Prime& p : m) {
      if (need_star) os << "*";
      os << p.str();
      need_star = true;
    }
  }
  return os.str();
}

BSeries BSeries::one(int t_cap) {
  BSeries s(t_cap);
  s.add_entry(0, BundleExpr::constant(1));
  return s;
}

BundleExpr BSeries::coefficient(int t_exp) const {
  auto it = entries_.find(t_exp);
  return it == entries_.end() ? BundleExpr() : it->second;
}

void BSeries::add_entry(int t_exp, const BundleExpr& e) {
  if (t_exp < 0) throw structural_error("negative t-exponent");
  if (t_exp > t_cap_ || e.is_zero()) return;
  auto it = entries_.find(t_exp);
  if (it == entries_.end()) {
    entries_.emplace(t_exp, e);
  } else {
    it->second += e;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

BSeries& BSeries::operator+=(const BSeries& o) {
  if (t_cap_ != o.t_cap_) throw structural_error("t-cap mismatch");
  for (const auto& [e, v] : o.entries_) add_entry(e, v);
  return *this;
}

BSeries operator*(const BSeries& a, const BSeries& b) {
  if (a.t_cap_ != b.t_cap_) throw structural_error("t-cap mismatch");
  BSeries r(a.t_cap_);
  for (const auto& [ea, va] : a.entries_) {
    for (const auto& [eb, vb] : b.entries_) {
      if (ea + eb > a.t_cap_) break;
      r.add_entry(ea + eb, va * vb);
    }
  }
  return r;
}

BSeries BSeries::scaled(const BundleExpr& e) const {
  BSeries r(t_cap_);
  for (const auto& [t, v] : entries_) r.add_entry(t, v * e);
  return r;
}

BSeries BSeries::shifted(int delta) const {
  BSeries r(t_cap_);
  for (const auto& [t, v] : entries_) {
    if (t + delta < 0) throw structural_error("t-shift below zero");
    r.add_entry(t + delta, v);
  }
  return r;
}

BSeries lambda_family(Atom a, bool reduced, bool half_integer, int sign, int t_cap) {
  BSeries acc = BSeries::one(t_cap);
  for (int n = 1;; ++n) {
    int e = half_integer ? 8 * n - 4 : 8 * n;
    if (e > t_cap) break;
    BSeries factor(t_cap);
    factor.add_entry(0, BundleExpr::constant(1));
    Int s = 1;
    for (int k = 1; k * e <= t_cap; ++k) {
      s *= sign;
      factor.add_entry(k * e, BundleExpr::lambda(a, reduced, k).scaled(s));
    }
    acc *= factor;
  }
  return acc;
}

BSeries sym_family(Atom a, bool reduced, int t_cap) {
  BSeries acc = BSeries::one(t_cap);
  for (int n = 1; 8 * n <= t_cap; ++n) {
    BSeries factor(t_cap);
    factor.add_entry(0, BundleExpr::constant(1));
    for (int k = 1; 8 * n * k <= t_cap; ++k)
      factor.add_entry(8 * n * k, BundleExpr::sym(a, reduced, k));
    acc *= factor;
  }
  return acc;
}

BSeries theta_big_tensor_expansion(int t_cap) {
  Atom T{AtomTag::TCZ};
  Atom Xi{AtomTag::XiC};
  return sym_family(T, true, t_cap) * lambda_family(Xi, true, false, 1, t_cap) *
         lambda_family(Xi, true, true, -1, t_cap) * lambda_family(Xi, true, true, 1, t_cap);
}

BSeries q1_kernel_expansion(int t_cap) {
  return sym_family(Atom{AtomTag::TCZ}, true, t_cap) *
         lambda_family(Atom{AtomTag::XiC}, true, false, -1, t_cap);
}

BSeries witten_bracket_expansion(int l, int v_index, int t_cap) {
  Atom V{AtomTag::VC, v_index};
  Atom DV{AtomTag::DeltaV, v_index};
  BSeries spin = lambda_family(V, false, false, 1, t_cap).scaled(BundleExpr::atom(DV));
  return spin.shifted(8 * l) + lambda_family(V, false, true, -1, t_cap) +
         lambda_family(V, false, true, 1, t_cap);
}

BSeries qe_expansion(int t_cap) {
  Atom E{AtomTag::EC};
  Atom DE{AtomTag::DeltaE};
  BSeries q1 = lambda_family(E, true, false, 1, t_cap).scaled(BundleExpr::atom(DE));
  return q1 * lambda_family(E, true, true, -1, t_cap) * lambda_family(E, true, true, 1, t_cap);
}

BSeries euler_power_expansion(int power, int t_cap) {
  RSeries e = euler_product(static_cast<std::size_t>(t_cap / 8) + 1).pow(power);
  BSeries r(t_cap);
  for (std::size_t n = 0; n < e.order(); ++n) {
    if (denominator(e[n]) != 1) throw structural_error("euler power not integral");
    r.add_entry(8 * static_cast<int>(n), BundleExpr::constant(numerator(e[n])));
  }
  return r;
}

}  // namespace acert
