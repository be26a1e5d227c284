#include <doctest.h>

#include "acert/theta.hpp"

using namespace acert;

namespace {

const int kCap = 31;

RingPtr scalar_ring() { return make_ring({}, 0); }

RingPtr z_ring() { return make_ring({{"z", 2, GenKind::chern_root}}, 8); }

Rational ct(const FormQSeries& s, int t) { return s.coefficient(t).constant_term(); }

}  // namespace

TEST_CASE("theta value q-expansions at z = 0") {
  RingPtr R = scalar_ring();
  FormQSeries t1 = theta_series(ThetaKind::theta1, R, -1, kCap);
  FormQSeries t2 = theta_series(ThetaKind::theta2, R, -1, kCap);
  FormQSeries t3 = theta_series(ThetaKind::theta3, R, -1, kCap);

  // theta vanishes identically at z = 0.
  CHECK(theta_series(ThetaKind::theta, R, -1, kCap).is_zero());

  // theta1(0) = 2t + 2t^9 + 2t^25 + ... (squares of odd integers).
  CHECK(ct(t1, 1) == 2);
  CHECK(ct(t1, 9) == 2);
  CHECK(ct(t1, 25) == 2);
  CHECK(t1.coefficient(5).is_zero());

  // theta2(0) = 1 - 2t^4 + 2t^16; theta3(0) flips the sign of the t^4 term.
  CHECK(ct(t2, 0) == 1);
  CHECK(ct(t2, 4) == -2);
  CHECK(ct(t2, 16) == 2);
  CHECK(ct(t3, 4) == 2);
  CHECK(ct(t3, 16) == 2);

  // Unit part of theta1(0)/(2t) inverts to 1 - q + q^2 - 2q^3.
  FormQSeries inv = series_invert(t1.shifted(-1).scaled(Rational(1, 2)));
  CHECK(ct(inv, 0) == 1);
  CHECK(ct(inv, 8) == -1);
  CHECK(ct(inv, 16) == 1);
  CHECK(ct(inv, 24) == -2);

  // theta'(0) = t * prod (1 - q^j)^3 = t - 3t^9 + 5t^25 - ...
  FormQSeries tp = theta_prime0(R, kCap);
  CHECK(ct(tp, 1) == 1);
  CHECK(ct(tp, 9) == -3);
  CHECK(ct(tp, 25) == 5);
}

TEST_CASE("per-root genus factors") {
  RingPtr R = z_ring();
  FormPolynomial z = FormPolynomial::generator(R, 0);
  FormPolynomial z2 = z * z;
  FormPolynomial z3 = z2 * z;
  FormPolynomial z4 = z2 * z2;

  // z theta'(0)/theta(z): q^0 part is (z/2)/sinh(z/2).
  FormQSeries fa = theta_factor_ahat(R, 0, kCap);
  CHECK(fa.q_coefficient(0) ==
        FormPolynomial::constant(R, 1) - z2.scaled(Rational(1, 24)) +
            z4.scaled(Rational(7, 5760)));
  CHECK(fa.q_coefficient(1) == z2 + z4.scaled(Rational(1, 24)));

  // theta(z)/(theta1 theta2 theta3)(0): q^0 part is sinh(z/2).
  FormQSeries olf = theta_odd_line_factor(R, 0, kCap);
  CHECK(olf.q_coefficient(0) == z.scaled(Rational(1, 2)) + z3.scaled(Rational(1, 48)));
  CHECK(olf.q_coefficient(1) == z3.scaled(Rational(-1, 2)));
}

TEST_CASE("parity in z") {
  RingPtr R = z_ring();
  FormPolynomial z = FormPolynomial::generator(R, 0);
  auto flip = [&](const FormQSeries& s) {
    FormQSeries r(R, kCap);
    for (const auto& [e, p] : s.entries()) r.set(e, p.substituted(0, -z));
    return r;
  };
  // The even ratios are invariant under z -> -z; theta itself is odd.
  for (ThetaKind k : {ThetaKind::theta1, ThetaKind::theta2, ThetaKind::theta3}) {
    FormQSeries r = theta_ratio_line(k, R, 0, kCap);
    CHECK(flip(r) == r);
  }
  FormQSeries th = theta_series(ThetaKind::theta, R, 0, kCap);
  CHECK(flip(th) == th.scaled(Rational(-1)));
  CHECK(flip(theta_factor_ahat(R, 0, kCap)) == theta_factor_ahat(R, 0, kCap));
}

TEST_CASE("euler identity collapses the odd-value triple product") {
  RingPtr R = scalar_ring();
  FormQSeries prod = theta_series(ThetaKind::theta1, R, -1, kCap) *
                     theta_series(ThetaKind::theta2, R, -1, kCap) *
                     theta_series(ThetaKind::theta3, R, -1, kCap);
  CHECK(prod == theta_prime0(R, kCap).scaled(2));
}

TEST_CASE("tau -> tau + 1 transformation law") {
  for (ThetaKind k :
       {ThetaKind::theta, ThetaKind::theta1, ThetaKind::theta2, ThetaKind::theta3}) {
    TTransformResult r = check_t_transform(k, kCap);
    CHECK(r.ok);
  }
}

TEST_CASE("root products multiply the per-root series") {
  RingPtr R = make_ring({{"u1", 2, GenKind::chern_root}, {"u2", 2, GenKind::chern_root}}, 8);
  FormQSeries prod = theta_product_v(ThetaKind::theta2, R, {0, 1}, kCap);
  FormQSeries byhand = theta_series(ThetaKind::theta2, R, 0, kCap) *
                       theta_series(ThetaKind::theta2, R, 1, kCap);
  CHECK(prod == byhand);
}
