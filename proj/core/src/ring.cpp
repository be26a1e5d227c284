#include "acert/ring.hpp"

namespace acert {

PolyRing::PolyRing(std::vector<Generator> gens, int degree_cap)
    : gens_(std::move(gens)), degree_cap_(degree_cap) {
  if (gens_.size() > kMaxGenerators) throw structural_error("too many generators");
  if (degree_cap_ < 0 || degree_cap_ % 2 != 0)
    throw structural_error("degree cap must be a non-negative even integer");
  for (const auto& g : gens_) {
    if (g.degree <= 0 || g.degree % 2 != 0)
      throw structural_error("generator degree must be a positive even integer");
    if (g.kind != GenKind::power_sum && g.degree != 2)
      throw structural_error("chern-root and line-class generators have degree 2");
  }
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i].name == gens_[j].name) throw structural_error("duplicate generator name");
}

int PolyRing::find(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(std::vector<Generator> gens, int degree_cap) {
  return std::make_shared<const PolyRing>(std::move(gens), degree_cap);
}

}  // namespace acert
