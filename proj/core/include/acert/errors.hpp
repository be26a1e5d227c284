#ifndef ACERT_ERRORS_HPP
#define ACERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace acert {

// Incompatible ring configurations (generator sets, caps).
struct structural_error : std::logic_error {
  explicit structural_error(const std::string& m) : std::logic_error(m) {}
};

// Leading coefficient not invertible.
struct singular_division_error : std::runtime_error {
  explicit singular_division_error(const std::string& m) : std::runtime_error(m) {}
};

// Symmetric-function conversion applied to an asymmetric input.
struct conversion_error : std::runtime_error {
  explicit conversion_error(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace acert

#endif
