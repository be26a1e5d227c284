#include <cstdint>

#include <doctest.h>

#include "acert/cyc_octic.hpp"
#include "acert/polynomial.hpp"
#include "acert/qseries.hpp"
#include "acert/rseries.hpp"

using namespace acert;

namespace {

// Local deterministic generator so the fuzz cases are reproducible.
struct Lcg {
  std::uint64_t s;
  std::uint64_t next() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return s >> 16;
  }
  long pick(long lo, long hi) { return lo + long(next() % std::uint64_t(hi - lo + 1)); }
};

FormPolynomial random_poly(const RingPtr& ring, Lcg& rng) {
  FormPolynomial p(ring);
  const int terms = int(rng.pick(0, 5));
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (std::size_t i = 0; i < ring->size(); ++i)
      m.e[i] = std::uint8_t(rng.pick(0, 2));
    p.add_term(m, Rational(rng.pick(-9, 9), rng.pick(1, 4)));
  }
  return p;
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a * b == Rational(1, 18));
  CHECK(to_string(Rational(-24)) == "-24");
  CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("dense series: euler product and inverses") {
  RSeries e = euler_product(13);
  // Pentagonal-number expansion of prod (1 - q^n).
  const long expect[13] = {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1};
  for (int i = 0; i < 13; ++i) CHECK(e[i] == Rational(expect[i]));

  RSeries inv = e.inverse();
  CHECK(e * inv == RSeries::one(13));

  RSeries f = RSeries::one(9) + RSeries::monomial(9, 1, Rational(3, 7));
  CHECK(f.log().exp() == f);
  CHECK(f.pow(3) == f * f * f);
}

TEST_CASE("octic cyclotomic integers") {
  CycOctic z = CycOctic::zeta();
  CycOctic z4 = z * z * z * z;
  CHECK(z4 == CycOctic(-1));
  CHECK(CycOctic::zeta_pow(8) == CycOctic(1));
  CHECK(CycOctic::zeta_pow(3) == z * z * z);
  CycOctic a(Rational(1), Rational(2), Rational(0), Rational(-1));
  CycOctic b(Rational(3), Rational(0), Rational(1), Rational(1));
  CHECK(a * b == b * a);
  CHECK((a - a).is_zero());
}

TEST_CASE("graded polynomials truncate at the degree cap") {
  RingPtr ring = make_ring({{"x", 2, GenKind::chern_root}, {"y", 2, GenKind::chern_root}}, 4);
  FormPolynomial x = FormPolynomial::generator(ring, 0);
  FormPolynomial y = FormPolynomial::generator(ring, 1);
  FormPolynomial p = (x + y) * (x + y);
  CHECK(p.is_homogeneous(4));
  CHECK(p * x == FormPolynomial::zero(ring));  // degree 6 > cap
  CHECK(p.degree_component(4) == p);
  CHECK(p.degree_component(2).is_zero());
  CHECK(p.substituted(1, -x) == FormPolynomial::zero(ring));  // (x - x)^2
  CHECK(p.evaluate({Rational(1), Rational(2)}) == Rational(9));
}

TEST_CASE("polynomial exp is exact on nilpotents") {
  RingPtr ring = make_ring({{"x", 2, GenKind::chern_root}}, 6);
  FormPolynomial x = FormPolynomial::generator(ring, 0);
  FormPolynomial e = poly_exp(x);
  CHECK(e.constant_term() == Rational(1));
  CHECK(e.degree_component(4) == (x * x).scaled(Rational(1, 2)));
  CHECK(e.degree_component(6) == (x * x * x).scaled(Rational(1, 6)));
}

TEST_CASE("q-series inversion, exp/log, integrality") {
  RingPtr ring = make_ring({{"x", 2, GenKind::chern_root}}, 4);
  FormQSeries one = FormQSeries::one(ring, 24);
  FormQSeries f = one;
  f.add_entry(4, FormPolynomial::constant(ring, Rational(5)));
  f.add_entry(8, FormPolynomial::generator(ring, 0));
  CHECK(f * series_invert(f) == one);
  CHECK(series_exp(series_log(f)) == f);
  CHECK_FALSE(f.is_integral());
  FormQSeries g = one;
  g.add_entry(16, FormPolynomial::generator(ring, 0, 2));
  CHECK(g.is_integral());
  CHECK(g.shifted(3).shifted(-3) == g);
  CHECK_THROWS_AS(series_invert(FormQSeries::zero(ring, 24)), singular_division_error);
}

TEST_CASE("ring axioms hold on fuzzed triples") {
  RingPtr ring = make_ring({{"x", 2, GenKind::chern_root},
                            {"y", 2, GenKind::chern_root},
                            {"c", 2, GenKind::line_class}},
                           8);
  Lcg rng{20240817};
  for (int it = 0; it < 1000; ++it) {
    FormPolynomial a = random_poly(ring, rng);
    FormPolynomial b = random_poly(ring, rng);
    FormPolynomial c = random_poly(ring, rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a + b == b + a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == FormPolynomial::zero(ring));
  }
}

TEST_CASE("cyclotomic ring axioms hold on fuzzed triples") {
  Lcg rng{7};
  auto rand_cyc = [&rng] {
    return CycOctic(Rational(rng.pick(-9, 9), rng.pick(1, 4)),
                    Rational(rng.pick(-9, 9), rng.pick(1, 4)),
                    Rational(rng.pick(-9, 9), rng.pick(1, 4)),
                    Rational(rng.pick(-9, 9), rng.pick(1, 4)));
  };
  for (int it = 0; it < 1000; ++it) {
    CycOctic a = rand_cyc(), b = rand_cyc(), c = rand_cyc();
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
  }
}
