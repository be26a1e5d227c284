#ifndef ACERT_THETA_HPP
#define ACERT_THETA_HPP

#include <vector>

#include "acert/qseries.hpp"

namespace acert {

// The four Jacobi theta q-expansions in geometric normalization: the
// substitution e^{2 pi i v} -> e^z is applied throughout, sin/cos become
// hyperbolic in z/2, and the constants pi and sqrt(-1) are absorbed. theta
// and theta1 carry a leading t^1 (t = q^{1/8}); theta2 and theta3 start at
// t^0.
enum class ThetaKind { theta, theta1, theta2, theta3 };

// z_gen: index of a degree-2 generator in ring, or -1 for z = 0.
FormQSeries theta_series(ThetaKind kind, const RingPtr& ring, int z_gen, int t_cap);

// theta'(0, tau) in the z-derivative sense: t * prod (1-q^j)^3.
FormQSeries theta_prime0(const RingPtr& ring, int t_cap);

// z * theta'(0,tau) / theta(z,tau); the q^0 part is (z/2)/sinh(z/2), the
// per-root factor of the A-hat genus.
FormQSeries theta_factor_ahat(const RingPtr& ring, int z_gen, int t_cap);

// theta_i(z,tau) / theta_i(0,tau) for i in {1,2,3}.
FormQSeries theta_ratio_line(ThetaKind kind, const RingPtr& ring, int z_gen, int t_cap);

// theta(z,tau) / (theta1 theta2 theta3)(0,tau); equals
// sinh(z/2) * prod (1-q^j e^z)(1-q^j e^-z)/(1-q^j)^2 by the Euler identity.
FormQSeries theta_odd_line_factor(const RingPtr& ring, int z_gen, int t_cap);

// prod_alpha theta_kind(u_alpha, tau) over the given root generators.
FormQSeries theta_product_v(ThetaKind kind, const RingPtr& ring,
                            const std::vector<int>& root_gens, int t_cap);

struct TTransformResult {
  bool ok = false;
  int first_mismatch_t = -1;
};

// Verifies the tau -> tau+1 law for the given kind by substituting
// t -> zeta_8 * t over cyclotomic coefficients.
TTransformResult check_t_transform(ThetaKind kind, int t_cap);

// Coefficient-wise conversion helpers used by the transformation check.
QSeries<CycOctic> to_cyclotomic(const FormQSeries& s);
QSeries<CycOctic> substitute_zeta_t(const QSeries<CycOctic>& s);

}  // namespace acert

#endif
