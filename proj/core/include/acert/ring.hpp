#ifndef ACERT_RING_HPP
#define ACERT_RING_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "acert/errors.hpp"

namespace acert {

enum class GenKind { chern_root, power_sum, line_class };

// Graded nilpotent generator. Chern roots and line classes sit in
// cohomological degree 2; the power sum P_m sits in degree 4m.
struct Generator {
  std::string name;
  int degree = 2;
  GenKind kind = GenKind::chern_root;

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.name == b.name && a.degree == b.degree && a.kind == b.kind;
  }
};

constexpr std::size_t kMaxGenerators = 32;

// Exponent vector; entries beyond the ring size stay zero, so plain
// lexicographic comparison over the array is the canonical term order.
struct Monomial {
  std::array<std::uint8_t, kMaxGenerators> e{};

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
  bool is_constant() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
};

// Immutable ring configuration: ordered generators plus the cohomological
// degree cap D. Polynomials referencing distinct configurations do not mix.
class PolyRing {
 public:
  PolyRing(std::vector<Generator> gens, int degree_cap);

  std::size_t size() const { return gens_.size(); }
  const Generator& gen(std::size_t i) const { return gens_[i]; }
  const std::vector<Generator>& generators() const { return gens_; }
  int degree_cap() const { return degree_cap_; }

  // -1 if absent.
  int find(const std::string& name) const;

  int monomial_degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) d += int(m.e[i]) * gens_[i].degree;
    return d;
  }

  bool same_config(const PolyRing& o) const {
    return degree_cap_ == o.degree_cap_ && gens_ == o.gens_;
  }

 private:
  std::vector<Generator> gens_;
  int degree_cap_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<Generator> gens, int degree_cap);

inline void check_compatible(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !a->same_config(*b))
    throw structural_error("polynomial ring configuration mismatch");
}

}  // namespace acert

#endif
