#ifndef ACERT_NEWTON_CONVERT_HPP
#define ACERT_NEWTON_CONVERT_HPP

#include "acert/char_calc.hpp"

namespace acert {

// Re-expresses a polynomial computed on the roots backend in power-sum
// coordinates: each root family must enter symmetrically and through even
// powers only. Gauss reduction to elementary symmetric functions of the
// squared roots, then Newton's identities. Throws conversion_error on
// asymmetric or odd input.
FormPolynomial newton_convert(const FormPolynomial& f, const ChContext& roots_ctx,
                              const ChContext& ps_ctx);

}  // namespace acert

#endif
