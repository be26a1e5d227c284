#ifndef ACERT_MODULAR_HPP
#define ACERT_MODULAR_HPP

#include <utility>
#include <vector>

#include "acert/geometry.hpp"
#include "acert/rseries.hpp"

namespace acert {

// Level-one Eisenstein series E4 or E6, coefficients from divisor sums;
// q_order + 1 coefficients retained.
RSeries eisenstein(int weight, int q_order);

// All monomials E4^a E6^b of total weight w with their q-expansions.
struct WeightBasis {
  int weight = 0;
  std::vector<std::pair<int, int>> pairs;  // (a, b) with 4a + 6b = w
  std::vector<RSeries> expansions;

  int dim() const { return static_cast<int>(pairs.size()); }
};

WeightBasis weight_basis(int w, int q_order);

// Exact linear relations forced on the q-coefficients of any weight-w form:
// with basis size d, a_j for j >= d is a fixed rational combination of
// a_0 .. a_{d-1}.
struct CoefficientRelation {
  int weight = 0;
  int dim = 0;
  // higher[j - dim][i] is the coefficient of a_i in the expression for a_j.
  std::vector<std::vector<Rational>> higher;
};

// Requires q_order >= basis size; asserts the basis leading square system is
// invertible (it is for Eisenstein monomials at these weights).
CoefficientRelation coefficient_relation(int w, int q_order);

// Modular weight of the geometry's series: 4l + 2k for single-bundle
// variants, 8l + 2k for two-bundle ones.
int weight_of(const GeometrySpec& g);

}  // namespace acert

#endif
