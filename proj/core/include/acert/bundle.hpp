#ifndef ACERT_BUNDLE_HPP
#define ACERT_BUNDLE_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "acert/rational.hpp"

namespace acert {

// Atoms of the virtual-bundle calculus. VC/DeltaV carry a bundle index (1 or
// 2) to cover the two-bundle variants.
enum class AtomTag { TCZ, XiC, VC, DeltaV, EC, DeltaE };

struct Atom {
  AtomTag tag = AtomTag::TCZ;
  int index = 1;

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

// A prime tensor factor: an atom, a reduced (tilde) atom, or an exterior /
// symmetric power of either. Reduced atoms are kept opaque so that canonical
// forms stay independent of free ranks (the rank N of E in particular);
// tilde-reduction of whole expressions expands at the top level.
struct Prime {
  enum class Op { Id, Lambda, Sym };
  Op op = Op::Id;
  Atom atom;
  bool reduced = false;
  int k = 1;

  friend auto operator<=>(const Prime&, const Prime&) = default;
  std::string str() const;
};

using BundleMonomial = std::vector<Prime>;  // kept sorted

// Integer-linear combination of tensor monomials in canonical form: factors
// sorted, like terms combined, no zero coefficients. Equality is structural.
class BundleExpr {
 public:
  BundleExpr() = default;

  static BundleExpr constant(const Int& n);
  static BundleExpr atom(Atom a, bool reduced = false);
  static BundleExpr lambda(Atom a, bool reduced, int k);
  static BundleExpr sym(Atom a, bool reduced, int k);

  const std::map<BundleMonomial, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const BundleMonomial& m, const Int& c);

  BundleExpr& operator+=(const BundleExpr& o);
  BundleExpr& operator-=(const BundleExpr& o);
  friend BundleExpr operator+(BundleExpr a, const BundleExpr& b) { return a += b; }
  friend BundleExpr operator-(BundleExpr a, const BundleExpr& b) { return a -= b; }
  BundleExpr operator-() const;
  BundleExpr scaled(const Int& s) const;

  friend BundleExpr operator*(const BundleExpr& a, const BundleExpr& b);
  BundleExpr& operator*=(const BundleExpr& o) { return *this = *this * o; }

  friend bool operator==(const BundleExpr& a, const BundleExpr& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  std::map<BundleMonomial, Int> terms_;
};

// q-series (in t = q^{1/8}) with BundleExpr coefficients; the structural
// route for the expansion lemmas.
class BSeries {
 public:
  BSeries() = default;
  explicit BSeries(int t_cap) : t_cap_(t_cap) {}

  static BSeries one(int t_cap);

  int t_cap() const { return t_cap_; }
  const std::map<int, BundleExpr>& entries() const { return entries_; }
  BundleExpr coefficient(int t_exp) const;
  BundleExpr q_coefficient(int n) const { return coefficient(8 * n); }

  void add_entry(int t_exp, const BundleExpr& e);

  BSeries& operator+=(const BSeries& o);
  friend BSeries operator+(BSeries a, const BSeries& b) { return a += b; }
  friend BSeries operator*(const BSeries& a, const BSeries& b);
  BSeries& operator*=(const BSeries& o) { return *this = *this * o; }
  BSeries scaled(const BundleExpr& e) const;
  BSeries shifted(int delta) const;

 private:
  int t_cap_ = 0;
  std::map<int, BundleExpr> entries_;
};

// Generating-series factors. "first" is the t-exponent of the n = 1 member;
// successive members step by 8 in the q-integer families and land on
// 8n - 4 for the half-integer ones.
BSeries lambda_family(Atom a, bool reduced, bool half_integer, int sign, int t_cap);
BSeries sym_family(Atom a, bool reduced, int t_cap);

// ch(Theta(TCZ, XiC)) expansion as virtual bundles: the S_{q^n}(TCZ~) family
// tensored with the three XiC~ exterior families.
BSeries theta_big_tensor_expansion(int t_cap);

// S_{q^n}(TCZ~) (x) Lambda_{-q^m}(XiC~): the kernel of the Q1 series.
BSeries q1_kernel_expansion(int t_cap);

// q^l D(V) (x) Lambda_{q^m}(VC) family plus the two half-integer families.
BSeries witten_bracket_expansion(int l, int v_index, int t_cap);

// Q(E) = Q1(E) (x) Q2(E) (x) Q3(E) from the odd-dimensional construction.
BSeries qe_expansion(int t_cap);

// (prod (1-q^n))^power as a constant-coefficient BSeries.
BSeries euler_power_expansion(int power, int t_cap);

}  // namespace acert

#endif
