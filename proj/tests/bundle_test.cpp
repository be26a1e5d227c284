#include <doctest.h>

#include "acert/bundle.hpp"

using namespace acert;

namespace {

const int kCap = 31;

const Atom kTz{AtomTag::TCZ, 1};
const Atom kXi{AtomTag::XiC, 1};
const Atom kV1{AtomTag::VC, 1};
const Atom kE{AtomTag::EC, 1};

}  // namespace

TEST_CASE("bundle expressions are a commutative ring with canonical forms") {
  BundleExpr a = BundleExpr::atom(kTz, true);
  BundleExpr b = BundleExpr::lambda(kXi, true, 2);
  BundleExpr c = BundleExpr::sym(kV1, false, 3);
  CHECK(a * b == b * a);
  CHECK((a + b) * c == a * c + b * c);
  CHECK(a - a == BundleExpr());
  CHECK(a.scaled(0).is_zero());
  CHECK(BundleExpr::constant(3) + BundleExpr::constant(-3) == BundleExpr());
  // Reduced and unreduced copies of the same atom are distinct symbols.
  CHECK(BundleExpr::atom(kXi, true) != BundleExpr::atom(kXi, false));
  // Same construction twice gives structurally equal expressions, with no
  // dependence on any ambient rank.
  CHECK(BundleExpr::lambda(kE, true, 3) == BundleExpr::lambda(kE, true, 3));
}

TEST_CASE("symmetric/exterior generating families start as expected") {
  // Lambda_t(Xi~) in the integer-q family: first member at t^8.
  BSeries lam = lambda_family(kXi, true, false, 1, kCap);
  CHECK(lam.coefficient(0) == BundleExpr::constant(1));
  CHECK(lam.coefficient(8) == BundleExpr::atom(kXi, true));
  // Half-integer families open on t^4; the t^8 slot holds the square term.
  BSeries half = lambda_family(kV1, false, true, 1, kCap);
  CHECK(half.coefficient(4) == BundleExpr::atom(kV1));
  CHECK(half.coefficient(8) == BundleExpr::lambda(kV1, false, 2));
  BSeries sym = sym_family(kTz, true, kCap);
  CHECK(sym.coefficient(8) == BundleExpr::atom(kTz, true));
}

TEST_CASE("big tensor q-expansion leading terms") {
  BSeries big = theta_big_tensor_expansion(kCap);
  CHECK(big.q_coefficient(0) == BundleExpr::constant(1));
  // q^1: T~ + Xi~ - Xi~ (x) Xi~ + 2 L^2(Xi~).
  BundleExpr xi = BundleExpr::atom(kXi, true);
  BundleExpr expect = BundleExpr::atom(kTz, true) + xi - xi * xi +
                      BundleExpr::lambda(kXi, true, 2).scaled(2);
  CHECK(big.q_coefficient(1) == expect);
}

TEST_CASE("alternating kernel q-expansion leading terms") {
  BSeries ker = q1_kernel_expansion(kCap);
  CHECK(ker.q_coefficient(0) == BundleExpr::constant(1));
  CHECK(ker.q_coefficient(1) ==
        BundleExpr::atom(kTz, true) - BundleExpr::atom(kXi, true));
}

TEST_CASE("spinor bracket q-expansion leading terms") {
  BSeries wb = witten_bracket_expansion(1, 1, kCap);
  // Only integer q-powers survive: the half-integer families cancel pairwise.
  for (const auto& [t, e] : wb.entries()) CHECK(t % 8 == 0);
  CHECK(wb.q_coefficient(0) == BundleExpr::constant(2));
  CHECK(wb.q_coefficient(1) ==
        BundleExpr::atom({AtomTag::DeltaV, 1}) + BundleExpr::lambda(kV1, false, 2).scaled(2));
}

TEST_CASE("odd-dimensional triple product starts at the spinor atom") {
  BSeries qe = qe_expansion(kCap);
  CHECK(qe.q_coefficient(0) == BundleExpr::atom({AtomTag::DeltaE, 1}));
  // q^1 coefficient is D(E) (x) (E~ + 2 L^2 E~ - E~ (x) E~).
  BundleExpr e = BundleExpr::atom(kE, true);
  BundleExpr g1 = e + BundleExpr::lambda(kE, true, 2).scaled(2) - e * e;
  CHECK(qe.q_coefficient(1) == BundleExpr::atom({AtomTag::DeltaE, 1}) * g1);
}

TEST_CASE("euler powers expand with integer coefficients") {
  BSeries e8 = euler_power_expansion(8, kCap);
  CHECK(e8.q_coefficient(0) == BundleExpr::constant(1));
  CHECK(e8.q_coefficient(1) == BundleExpr::constant(-8));
  CHECK(e8.q_coefficient(2) == BundleExpr::constant(20));
  CHECK(e8.q_coefficient(3) == BundleExpr::constant(0));
  BSeries e16 = euler_power_expansion(16, kCap);
  CHECK(e16.q_coefficient(1) == BundleExpr::constant(-16));
  CHECK(e16.q_coefficient(2) == BundleExpr::constant(104));
  CHECK(e16.q_coefficient(3) == BundleExpr::constant(-320));
}

TEST_CASE("bundle q-series multiply like polynomials in t") {
  BSeries a(kCap), b(kCap);
  a.add_entry(0, BundleExpr::constant(1));
  a.add_entry(8, BundleExpr::atom(kTz, true));
  b.add_entry(4, BundleExpr::atom(kV1));
  BSeries ab = a * b;
  CHECK(ab.coefficient(4) == BundleExpr::atom(kV1));
  CHECK(ab.coefficient(12) == BundleExpr::atom(kTz, true) * BundleExpr::atom(kV1));
  CHECK(ab.shifted(4).coefficient(8) == BundleExpr::atom(kV1));
}
