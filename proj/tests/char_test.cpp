#include <doctest.h>

#include "acert/char_calc.hpp"
#include "acert/newton_convert.hpp"

using namespace acert;

namespace {

GeometrySpec spec(int dim, int l, Variant v, Backend b) {
  GeometrySpec g;
  g.dimension = dim;
  g.l = l;
  g.variant = v;
  g.backend = b;
  return g;
}

}  // namespace

TEST_CASE("character of the complexified line bundle") {
  ChCalculator calc(spec(8, 1, Variant::q_even, Backend::powersum));
  const RingPtr& R = calc.ring();
  FormPolynomial c = FormPolynomial::generator(R, calc.context().c_gen);
  // ch(xi_C) = e^c + e^{-c} = 2 + c^2 + c^4/12 at this degree cap.
  FormPolynomial expect = FormPolynomial::constant(R, 2) + c * c +
                          (c * c * c * c).scaled(Rational(1, 12));
  CHECK(calc.ch(BundleExpr::atom({AtomTag::XiC, 1})) == expect);
  // The reduced atom subtracts the rank.
  CHECK(calc.ch(BundleExpr::atom({AtomTag::XiC, 1}, true)) ==
        expect - FormPolynomial::constant(R, 2));
}

TEST_CASE("A-hat genus and spinor character in power-sum coordinates") {
  ChCalculator calc(spec(8, 1, Variant::q_even, Backend::powersum));
  const ChContext& ctx = calc.context();
  FormPolynomial pt1 = FormPolynomial::generator(ctx.ring, ctx.pt_gens[0]);
  FormPolynomial pt2 = FormPolynomial::generator(ctx.ring, ctx.pt_gens[1]);
  FormPolynomial ah = calc.ahat();
  CHECK(ah.degree_component(0) == FormPolynomial::constant(ctx.ring, 1));
  CHECK(ah.degree_component(4) == pt1.scaled(Rational(-1, 24)));
  CHECK(ah.degree_component(8) ==
        pt2.scaled(Rational(1, 2880)) + (pt1 * pt1).scaled(Rational(1, 1152)));
  // Rank-16 real spin bundle: spinors have rank 2^8.
  FormPolynomial sp = calc.spinor_ch(0);
  CHECK(sp.degree_component(0) == FormPolynomial::constant(ctx.ring, 256));
  FormPolynomial pv1 = FormPolynomial::generator(ctx.ring, ctx.pv_gens[0][0]);
  CHECK(sp.degree_component(4) == pv1.scaled(32));
}

TEST_CASE("adams operations scale power sums by k^2m") {
  ChCalculator calc(spec(8, 1, Variant::q_even, Backend::powersum));
  Atom v{AtomTag::VC, 1};
  FormPolynomial one_v = calc.psi_ch(v, 1);
  CHECK(one_v == calc.ch(BundleExpr::atom(v)));
  CHECK(calc.psi_ch(v, 2).degree_component(4) == one_v.degree_component(4).scaled(4));
  CHECK(calc.psi_ch(v, 2).degree_component(8) == one_v.degree_component(8).scaled(16));
  CHECK(calc.psi_ch(v, 3).degree_component(4) == one_v.degree_component(4).scaled(9));
}

TEST_CASE("newton conversion and backend cross-agreement") {
  GeometrySpec gr = spec(8, 1, Variant::q_even, Backend::roots);
  GeometrySpec gp = spec(8, 1, Variant::q_even, Backend::powersum);
  ChCalculator roots(gr), ps(gp);
  const ChContext& rc = roots.context();
  const ChContext& pc = ps.context();

  // sum x_j^2 -> P_1 of the tangent family.
  FormPolynomial sum_sq(rc.ring);
  for (int g : rc.x_gens) {
    FormPolynomial x = FormPolynomial::generator(rc.ring, g);
    sum_sq += x * x;
  }
  CHECK(newton_convert(sum_sq, rc, pc) ==
        FormPolynomial::generator(pc.ring, pc.pt_gens[0]));

  // The two backends compute the same characters after conversion.
  CHECK(newton_convert(roots.ahat(), rc, pc) == ps.ahat());
  CHECK(newton_convert(roots.spinor_ch(0), rc, pc) == ps.spinor_ch(0));
  CHECK(newton_convert(roots.witten_bracket(0).q_coefficient(1), rc, pc) ==
        ps.witten_bracket(0).q_coefficient(1));
  CHECK(newton_convert(roots.theta_big_tensor().q_coefficient(1), rc, pc) ==
        ps.theta_big_tensor().q_coefficient(1));

  // Asymmetric input is rejected.
  CHECK_THROWS_AS(newton_convert(FormPolynomial::generator(rc.ring, rc.x_gens[0]), rc, pc),
                  conversion_error);
}

TEST_CASE("the p1 constraint substitutes the auxiliary power sum") {
  ChCalculator q(spec(8, 1, Variant::q_even, Backend::powersum));
  const ChContext& qc = q.context();
  FormPolynomial pv1 = FormPolynomial::generator(qc.ring, qc.pv_gens[0][0]);
  FormPolynomial pt1 = FormPolynomial::generator(qc.ring, qc.pt_gens[0]);
  FormPolynomial c = FormPolynomial::generator(qc.ring, qc.c_gen);
  CHECK(apply_constraint(pv1, qc) == pt1 - (c * c).scaled(3));

  ChCalculator q1(spec(10, 1, Variant::q1_even, Backend::powersum));
  const ChContext& q1c = q1.context();
  FormPolynomial pv1b = FormPolynomial::generator(q1c.ring, q1c.pv_gens[0][0]);
  FormPolynomial pt1b = FormPolynomial::generator(q1c.ring, q1c.pt_gens[0]);
  FormPolynomial cb = FormPolynomial::generator(q1c.ring, q1c.c_gen);
  CHECK(apply_constraint(pv1b, q1c) == pt1b - cb * cb);
}

TEST_CASE("rank homomorphism") {
  GeometrySpec g = spec(8, 1, Variant::q_even, Backend::powersum);
  auto rank_of = [&g](Atom a) { return atom_rank(g, a); };
  CHECK(bundle_rank(BundleExpr::atom({AtomTag::VC, 1}), rank_of) == 16);
  CHECK(bundle_rank(BundleExpr::atom({AtomTag::DeltaV, 1}), rank_of) == 256);
  CHECK(bundle_rank(BundleExpr::atom({AtomTag::XiC, 1}, true), rank_of) == 0);
  CHECK(bundle_rank(BundleExpr::lambda({AtomTag::VC, 1}, false, 2), rank_of) ==
        Int(16) * 15 / 2);
}

TEST_CASE("randomized evaluation is deterministic and seed-sensitive") {
  ChCalculator calc(spec(8, 1, Variant::q_even, Backend::powersum));
  const ChContext& ctx = calc.context();
  FormPolynomial f = calc.ahat() * calc.spinor_ch(0);
  Rational a = random_evaluate(f, ctx, 1);
  Rational b = random_evaluate(f, ctx, 1);
  Rational c = random_evaluate(f, ctx, 2);
  CHECK(a == b);
  CHECK(a != c);
  // Evaluation respects the ring operations.
  FormPolynomial g = calc.ahat();
  CHECK(random_evaluate(f + g, ctx, 5) ==
        random_evaluate(f, ctx, 5) + random_evaluate(g, ctx, 5));
}
