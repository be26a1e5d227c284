#include <doctest.h>

#include "acert/modular.hpp"

using namespace acert;

TEST_CASE("eisenstein q-expansions") {
  RSeries e4 = eisenstein(4, 3);
  CHECK(e4[0] == 1);
  CHECK(e4[1] == 240);
  CHECK(e4[2] == 2160);
  CHECK(e4[3] == 6720);
  RSeries e6 = eisenstein(6, 3);
  CHECK(e6[0] == 1);
  CHECK(e6[1] == -504);
  CHECK(e6[2] == -16632);
  CHECK(e6[3] == -122976);
  CHECK_THROWS(eisenstein(5, 3));
}

TEST_CASE("weight bases enumerate the eisenstein monomials") {
  WeightBasis w8 = weight_basis(8, 3);
  REQUIRE(w8.dim() == 1);
  CHECK(w8.pairs[0] == std::pair<int, int>{2, 0});
  CHECK(w8.expansions[0][1] == 480);
  CHECK(w8.expansions[0][2] == 61920);
  CHECK(w8.expansions[0][3] == 1050240);

  WeightBasis w12 = weight_basis(12, 2);
  REQUIRE(w12.dim() == 2);
  CHECK(w12.pairs[0] == std::pair<int, int>{3, 0});
  CHECK(w12.pairs[1] == std::pair<int, int>{0, 2});
  // E4^3 and E6^2 expansions; their difference opens with 1728 q.
  CHECK(w12.expansions[0][1] == 720);
  CHECK(w12.expansions[0][2] == 179280);
  CHECK(w12.expansions[1][1] == -1008);
  CHECK(w12.expansions[1][2] == 220752);
  CHECK(w12.expansions[0][1] - w12.expansions[1][1] == 1728);
}

TEST_CASE("coefficient relations at the certificate-relevant weights") {
  CoefficientRelation w8 = coefficient_relation(8, 3);
  REQUIRE(w8.dim == 1);
  CHECK(w8.higher[0][0] == 480);
  CHECK(w8.higher[1][0] == 61920);

  CoefficientRelation w10 = coefficient_relation(10, 3);
  CHECK(w10.higher[0][0] == -264);
  CHECK(w10.higher[1][0] == -135432);

  CoefficientRelation w12 = coefficient_relation(12, 3);
  REQUIRE(w12.dim == 2);
  CHECK(w12.higher[0][0] == 196560);
  CHECK(w12.higher[0][1] == -24);

  CoefficientRelation w14 = coefficient_relation(14, 3);
  REQUIRE(w14.dim == 1);
  CHECK(w14.higher[0][0] == -24);
  CHECK(w14.higher[1][0] == -196632);

  // Not enough retained coefficients to pin the basis.
  CHECK_THROWS(coefficient_relation(12, 1));
}

TEST_CASE("weight-12 relation independently via a 2x2 solve") {
  // Solve f = alpha E4^3 + beta E6^2 from (a0, a1), then compare a2.
  WeightBasis w12 = weight_basis(12, 4);
  const RSeries& b0 = w12.expansions[0];
  const RSeries& b1 = w12.expansions[1];
  Rational det = b0[0] * b1[1] - b1[0] * b0[1];
  REQUIRE(det != 0);
  // Generic test form: a0 = 2, a1 = -5.
  Rational a0 = 2, a1 = -5;
  Rational alpha = (a0 * b1[1] - b1[0] * a1) / det;
  Rational beta = (b0[0] * a1 - a0 * b0[1]) / det;
  Rational a2 = alpha * b0[2] + beta * b1[2];
  CHECK(a2 == Rational(196560) * a0 - Rational(24) * a1);
  Rational a3 = alpha * b0[3] + beta * b1[3];
  CoefficientRelation rel = coefficient_relation(12, 4);
  CHECK(a3 == rel.higher[1][0] * a0 + rel.higher[1][1] * a1);
}

TEST_CASE("modular weight of a geometry") {
  GeometrySpec g;
  g.dimension = 8;
  g.l = 1;
  g.variant = Variant::q_even;
  CHECK(weight_of(g) == 8);  // 4l + 2k, k = 2
  g.dimension = 10;
  g.variant = Variant::q1_even;
  CHECK(weight_of(g) == 8);
  g.dimension = 12;
  g.l = 1;
  g.variant = Variant::q_even_two;
  CHECK(weight_of(g) == 14);  // 8l + 2k, k = 3
  g.dimension = 8;
  g.l = 2;
  g.variant = Variant::q_even;
  CHECK(weight_of(g) == 12);
}
