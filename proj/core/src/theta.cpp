#include "acert/theta.hpp"

namespace acert {

namespace {

FormPolynomial exp_of(const RingPtr& ring, int z_gen, const Rational& scale) {
  if (z_gen < 0) return FormPolynomial::constant(ring, 1);
  FormPolynomial z = FormPolynomial::generator(ring, static_cast<std::size_t>(z_gen));
  return poly_exp(z.scaled(scale));
}

void require_root(const RingPtr& ring, int z_gen) {
  if (z_gen < 0) return;
  if (z_gen >= static_cast<int>(ring->size()) ||
      ring->gen(static_cast<std::size_t>(z_gen)).degree != 2)
    throw std::domain_error("theta argument must be a degree-2 generator or 0");
}

// Multiplies acc by (1 + sign * t^e * f) for every e = step*j (+offset) <= cap.
void mul_product_family(FormQSeries& acc, int first, int step, const FormPolynomial& f,
                        int sign) {
  for (int e = first; e <= acc.t_cap(); e += step) {
    FormQSeries factor = FormQSeries::one(acc.ring(), acc.t_cap());
    factor.add_entry(e, sign > 0 ? f : -f);
    acc *= factor;
  }
}

}  // namespace

FormQSeries theta_series(ThetaKind kind, const RingPtr& ring, int z_gen, int t_cap) {
  require_root(ring, z_gen);
  FormPolynomial ep = exp_of(ring, z_gen, 1);
  FormPolynomial em = exp_of(ring, z_gen, -1);
  FormPolynomial one = FormPolynomial::constant(ring, 1);

  FormQSeries s(ring, t_cap);
  switch (kind) {
    case ThetaKind::theta: {
      FormPolynomial pre = exp_of(ring, z_gen, Rational(1, 2)) - exp_of(ring, z_gen, Rational(-1, 2));
      s = FormQSeries::from_poly(1, pre, t_cap);
      mul_product_family(s, 8, 8, one, -1);
      mul_product_family(s, 8, 8, ep, -1);
      mul_product_family(s, 8, 8, em, -1);
      break;
    }
    case ThetaKind::theta1: {
      FormPolynomial pre = exp_of(ring, z_gen, Rational(1, 2)) + exp_of(ring, z_gen, Rational(-1, 2));
      s = FormQSeries::from_poly(1, pre, t_cap);
      mul_product_family(s, 8, 8, one, -1);
      mul_product_family(s, 8, 8, ep, 1);
      mul_product_family(s, 8, 8, em, 1);
      break;
    }
    case ThetaKind::theta2: {
      s = FormQSeries::one(ring, t_cap);
      mul_product_family(s, 8, 8, one, -1);
      mul_product_family(s, 4, 8, ep, -1);
      mul_product_family(s, 4, 8, em, -1);
      break;
    }
    case ThetaKind::theta3: {
      s = FormQSeries::one(ring, t_cap);
      mul_product_family(s, 8, 8, one, -1);
      mul_product_family(s, 4, 8, ep, 1);
      mul_product_family(s, 4, 8, em, 1);
      break;
    }
  }
  return s;
}

FormQSeries theta_prime0(const RingPtr& ring, int t_cap) {
  FormQSeries s = FormQSeries::from_poly(1, FormPolynomial::constant(ring, 1), t_cap);
  FormPolynomial one = FormPolynomial::constant(ring, 1);
  for (int i = 0; i < 3; ++i) mul_product_family(s, 8, 8, one, -1);
  return s;
}

FormQSeries theta_factor_ahat(const RingPtr& ring, int z_gen, int t_cap) {
  require_root(ring, z_gen);
  // sinh(z/2)/(z/2) = sum z^{2m} / (4^m (2m+1)!), a unit.
  FormPolynomial sq = FormPolynomial::constant(ring, 0);
  if (z_gen >= 0) {
    FormPolynomial z = FormPolynomial::generator(ring, static_cast<std::size_t>(z_gen));
    sq = z * z;
  }
  FormPolynomial sinh_quot = FormPolynomial::constant(ring, 1);
  FormPolynomial pw = FormPolynomial::constant(ring, 1);
  for (unsigned m = 1;; ++m) {
    pw = pw * sq;
    if (pw.is_zero()) break;
    sinh_quot += pw.scaled(Rational(1) / Rational(pow_int(4, m) * factorial(2 * m + 1)));
  }

  FormPolynomial ep = exp_of(ring, z_gen, 1);
  FormPolynomial em = exp_of(ring, z_gen, -1);
  FormQSeries den = FormQSeries::from_poly(0, sinh_quot, t_cap);
  mul_product_family(den, 8, 8, ep, -1);
  mul_product_family(den, 8, 8, em, -1);

  FormQSeries num = FormQSeries::one(ring, t_cap);
  FormPolynomial one = FormPolynomial::constant(ring, 1);
  mul_product_family(num, 8, 8, one, -1);
  mul_product_family(num, 8, 8, one, -1);

  return num * series_invert(den);
}

FormQSeries theta_ratio_line(ThetaKind kind, const RingPtr& ring, int z_gen, int t_cap) {
  if (kind == ThetaKind::theta)
    throw std::domain_error("theta_ratio_line: kind must be theta1/2/3");
  FormQSeries num = theta_series(kind, ring, z_gen, t_cap);
  FormQSeries den = theta_series(kind, ring, -1, t_cap);
  return series_divide(num, den);
}

FormQSeries theta_odd_line_factor(const RingPtr& ring, int z_gen, int t_cap) {
  require_root(ring, z_gen);
  FormQSeries num = theta_series(ThetaKind::theta, ring, z_gen, t_cap);
  FormQSeries den = theta_series(ThetaKind::theta1, ring, -1, t_cap) *
                    theta_series(ThetaKind::theta2, ring, -1, t_cap) *
                    theta_series(ThetaKind::theta3, ring, -1, t_cap);
  // The absorbed sqrt(-1) of the geometric normalization cancels here; the
  // quotient is sinh(z/2) * prod (1-q^j e^z)(1-q^j e^-z)/(1-q^j)^2.
  return series_divide(num, den);
}

FormQSeries theta_product_v(ThetaKind kind, const RingPtr& ring,
                            const std::vector<int>& root_gens, int t_cap) {
  FormQSeries acc = FormQSeries::one(ring, t_cap);
  for (int g : root_gens) acc *= theta_series(kind, ring, g, t_cap);
  return acc;
}

QSeries<CycOctic> to_cyclotomic(const FormQSeries& s) {
  QSeries<CycOctic> r(s.ring(), s.t_cap());
  for (const auto& [e, p] : s.entries()) {
    Polynomial<CycOctic> q(s.ring());
    for (const auto& [m, c] : p.terms()) q.add_term(m, CycOctic(c));
    r.set(e, std::move(q));
  }
  return r;
}

QSeries<CycOctic> substitute_zeta_t(const QSeries<CycOctic>& s) {
  QSeries<CycOctic> r(s.ring(), s.t_cap());
  for (const auto& [e, p] : s.entries())
    r.set(e, p.scaled(CycOctic::zeta_pow(static_cast<unsigned>(e))));
  return r;
}

TTransformResult check_t_transform(ThetaKind kind, int t_cap) {
  // A single nilpotent root suffices; degree cap 8 keeps z^4 alive.
  RingPtr ring = make_ring({{"z", 2, GenKind::chern_root}}, 8);
  auto lhs = substitute_zeta_t(to_cyclotomic(theta_series(kind, ring, 0, t_cap)));

  QSeries<CycOctic> rhs(ring, t_cap);
  switch (kind) {
    case ThetaKind::theta:
    case ThetaKind::theta1:
      rhs = to_cyclotomic(theta_series(kind, ring, 0, t_cap)).scaled(CycOctic::zeta());
      break;
    case ThetaKind::theta2:
      rhs = to_cyclotomic(theta_series(ThetaKind::theta3, ring, 0, t_cap));
      break;
    case ThetaKind::theta3:
      rhs = to_cyclotomic(theta_series(ThetaKind::theta2, ring, 0, t_cap));
      break;
  }

  TTransformResult res;
  if (lhs == rhs) {
    res.ok = true;
    return res;
  }
  for (int e = 0; e <= t_cap; ++e) {
    if (!(lhs.coefficient(e) == rhs.coefficient(e))) {
      res.first_mismatch_t = e;
      break;
    }
  }
  return res;
}

}  // namespace acert
