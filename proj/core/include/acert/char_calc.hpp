#ifndef ACERT_CHAR_CALC_HPP
#define ACERT_CHAR_CALC_HPP

#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "acert/bundle.hpp"
#include "acert/geometry.hpp"
#include "acert/qseries.hpp"

namespace acert {

// Generator assignment for one geometry. The roots backend carries explicit
// Chern roots (x for the tangent bundle, u per auxiliary bundle); the
// powersum backend carries P_m generators instead. The line class c is shared
// and absent in the spin specialization.
struct ChContext {
  GeometrySpec geom;
  RingPtr ring;
  int c_gen = -1;
  std::vector<int> x_gens;                // roots backend only
  std::vector<std::vector<int>> u_gens;   // roots backend, per bundle
  std::vector<int> pt_gens;               // powersum backend only
  std::vector<std::vector<int>> pv_gens;  // powersum backend, per bundle

  bool uses_roots() const { return !x_gens.empty(); }
  int t_cap() const { return geom.t_cap(); }
  // Largest power-sum index that fits under the degree cap.
  int max_m() const { return geom.dimension / 4; }
};

// Builds the ring for the geometry; the random backend shares the powersum
// ring (randomization happens at evaluation time). Even variants only.
ChContext make_context(const GeometrySpec& g);

// Sum of 2m-th powers of the family's roots, or the P_m generator.
FormPolynomial power_sum_tz(const ChContext& ctx, int m);
FormPolynomial power_sum_v(const ChContext& ctx, int bundle, int m);

// Integer rank of an atom in this geometry (symbol atoms EC/D(E) rejected).
Int atom_rank(const GeometrySpec& g, Atom a);

// Rank homomorphism on canonical bundle expressions with a caller-supplied
// atom rank (exterior powers use generalized binomials, symmetric powers the
// multiset count).
Int bundle_rank(const BundleExpr& e, const std::function<Int(Atom)>& rank_of);

// Chern-character calculus over one context, with memoized exterior and
// symmetric powers. The roots backend evaluates root products directly; the
// powersum backend goes through Adams operations, so agreement between the
// two is a genuine cross-check.
class ChCalculator {
 public:
  explicit ChCalculator(const GeometrySpec& g) : ctx_(make_context(g)) {}
  explicit ChCalculator(ChContext ctx) : ctx_(std::move(ctx)) {}

  const ChContext& context() const { return ctx_; }
  const RingPtr& ring() const { return ctx_.ring; }

  // ch(psi^k W) for a complexified atom; the entry point of the Adams
  // recurrences, exact on both backends.
  FormPolynomial psi_ch(Atom a, int k);

  FormPolynomial ch(const BundleExpr& e);
  FormQSeries ch_series(const BSeries& s);

  FormPolynomial ahat();
  FormPolynomial exp_half_c();
  FormPolynomial spinor_ch(int bundle);

  // ch of the big symmetric/exterior tensor of the tangent and line bundles.
  FormQSeries theta_big_tensor();
  // ch of the alternating-sign kernel (q1 variants).
  FormQSeries q1_kernel();
  // q^l ch(spinor (x) exterior family) plus the two half-integer families.
  FormQSeries witten_bracket(int bundle);

  FormQSeries euler_series(int power);

 private:
  FormPolynomial prime_ch(const Prime& p);
  FormPolynomial lam_sym_ch(Prime::Op op, Atom a, int k);

  ChContext ctx_;
  std::map<std::tuple<int, AtomTag, int, int>, FormPolynomial> cache_;
};

// Substitutes P_1 of the first auxiliary bundle using the geometry's p1
// relation. Powersum coordinates only.
FormPolynomial apply_constraint(const FormPolynomial& f, const ChContext& ctx);

// Deterministic pseudo-random rational values for every free generator:
// a 64-bit linear congruential generator (Knuth MMIX multiplier), numerator
// in [-99, 99], denominator in [1, 9].
std::vector<Rational> random_values(const ChContext& ctx, std::uint64_t seed);
Rational random_evaluate(const FormPolynomial& f, const ChContext& ctx, std::uint64_t seed);

}  // namespace acert

#endif
