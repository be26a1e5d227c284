#include "acert/geometry.hpp"

#include <stdexcept>

namespace acert {

bool variant_is_q1(Variant v) {
  return v == Variant::q1_even || v == Variant::q1_even_two || v == Variant::q1_odd ||
         v == Variant::q1_odd_two;
}

bool variant_is_odd(Variant v) {
  return v == Variant::q_odd || v == Variant::q_odd_two || v == Variant::q1_odd ||
         v == Variant::q1_odd_two;
}

bool variant_is_two_bundle(Variant v) {
  return v == Variant::q_even_two || v == Variant::q_odd_two || v == Variant::q1_even_two ||
         v == Variant::q1_odd_two;
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::q_even: return "q-even";
    case Variant::q_even_two: return "q-two-bundle";
    case Variant::q1_even: return "q1-even";
    case Variant::q1_even_two: return "q1-two-bundle";
    case Variant::q_odd: return "q-odd";
    case Variant::q_odd_two: return "q-odd-two-bundle";
    case Variant::q1_odd: return "q1-odd";
    case Variant::q1_odd_two: return "q1-odd-two-bundle";
  }
  return "?";
}

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::roots: return "roots";
    case Backend::powersum: return "powersum";
    case Backend::random: return "random";
  }
  return "?";
}

int GeometrySpec::k() const {
  // dimension = 4k, 4k+2, 4k-1, 4k+1 depending on variant.
  int offset = is_odd() ? (is_q1() ? 1 : -1) : (is_q1() ? 2 : 0);
  int num = dimension - offset;
  if (num <= 0 || num % 4 != 0)
    throw std::domain_error("dimension does not match variant parity");
  return num / 4;
}

void GeometrySpec::validate() const {
  if (l < 1 || l > 3) throw std::domain_error("l must be 1, 2, or 3");
  if (q_order < 1) throw std::domain_error("q-order must be positive");
  if (xi_rank != 1 && xi_rank != 2) throw std::domain_error("xi rank must be 1 or 2");
  (void)k();
}

}  // namespace acert
