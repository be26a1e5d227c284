#ifndef ACERT_GEOMETRY_HPP
#define ACERT_GEOMETRY_HPP

#include <cstdint>
#include <string>

namespace acert {

// Which of the eight q-series families is being assembled. "q1" variants use
// the alternating-sign exterior family on the line bundle and live on
// dimensions 4k+2 (even) or 4k+1 (odd); plain "q" variants live on 4k
// (even) or 4k-1 (odd). "_two" variants carry two auxiliary spin bundles.
enum class Variant {
  q_even,
  q_even_two,
  q1_even,
  q1_even_two,
  q_odd,
  q_odd_two,
  q1_odd,
  q1_odd_two,
};

enum class Backend { roots, powersum, random };

bool variant_is_q1(Variant v);
bool variant_is_odd(Variant v);
bool variant_is_two_bundle(Variant v);
std::string variant_name(Variant v);
std::string backend_name(Backend b);

// A verification geometry: base dimension, the size parameter l of the
// rank-16l spin bundles, the series variant, and engine options.
struct GeometrySpec {
  int dimension = 8;
  int l = 1;
  Variant variant = Variant::q_even;
  Backend backend = Backend::powersum;
  int q_order = 3;
  std::uint64_t seed = 1;
  // Spin specialization: the line bundle is trivial and c = 0.
  bool xi_trivial = false;
  // Convention flag for the reduced line-bundle families: 2 treats the line
  // bundle as a complexified rank-2 real bundle (roots +-c), 1 as the
  // complex line bundle itself (single root c).
  int xi_rank = 2;

  bool is_q1() const { return variant_is_q1(variant); }
  bool is_odd() const { return variant_is_odd(variant); }
  int bundle_count() const { return variant_is_two_bundle(variant) ? 2 : 1; }
  int euler_power() const { return 8 * l * bundle_count(); }
  int t_cap() const { return 8 * q_order + 7; }

  // The k of the dimension pattern (4k, 4k+2, 4k-1, 4k+1 by variant).
  int k() const;
  // Throws std::domain_error on parity mismatch or out-of-range parameters.
  void validate() const;
};

}  // namespace acert

#endif
