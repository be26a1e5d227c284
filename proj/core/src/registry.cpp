#include "acert/verifier.hpp"

namespace acert {

namespace {

GeometrySpec geom(int dim, int l, Variant v, Backend b, bool xi_trivial = false) {
  GeometrySpec g;
  g.dimension = dim;
  g.l = l;
  g.variant = v;
  g.backend = b;
  g.xi_trivial = xi_trivial;
  return g;
}

std::vector<TheoremEntry> make_registry() {
  using R = Rational;
  const Backend ps = Backend::powersum;
  const Backend rnd = Backend::random;
  const std::string eta_flag =
      "index/eta corollary implied; analytic content not checked";
  std::vector<TheoremEntry> reg;

  reg.push_back({"T2.3-1", geom(8, 1, Variant::q_even, ps),
                 {{"r1", R(480)}, {"r2", R(61920)}},
                 {eta_flag}});
  reg.push_back({"T2.3-2", geom(12, 1, Variant::q_even, ps),
                 {{"r1", R(-264)}, {"r2", R(-135432)}},
                 {eta_flag}});
  reg.push_back({"T2.3-3", geom(16, 1, Variant::q_even, rnd, true),
                 {{"A", R(196560)}, {"B", R(-24)}},
                 {eta_flag, "Z is spin: line bundle trivial, c = 0"}});
  reg.push_back({"T2.3-4", geom(20, 1, Variant::q_even, rnd),
                 {{"r1", R(-24)}, {"r2", R(-196632)}},
                 {eta_flag}});
  TheoremEntry t235{"T2.3-5", geom(8, 2, Variant::q_even, ps),
                    {{"A", R(196560)}, {"B", R(-24)}},
                    {eta_flag,
                     "statement read both ways: generic line bundle and spin "
                     "(c = 0); both certified"},
                    true};
  reg.push_back(t235);
  reg.push_back({"T2.3-6", geom(12, 2, Variant::q_even, ps),
                 {{"r1", R(-24)}},
                 {eta_flag}});
  reg.push_back({"T2.5", geom(12, 1, Variant::q_even_two, ps),
                 {{"r1", R(-24)}},
                 {eta_flag}});

  reg.push_back({"T2.8-1", geom(10, 1, Variant::q1_even, ps),
                 {{"r1", R(480)}, {"r2", R(61920)}},
                 {eta_flag}});
  reg.push_back({"T2.8-2", geom(14, 1, Variant::q1_even, ps),
                 {{"r1", R(-264)}, {"r2", R(-135432)}},
                 {eta_flag}});
  reg.push_back({"T2.8-3", geom(18, 1, Variant::q1_even, rnd),
                 {{"A", R(196560)}, {"B", R(-24)}},
                 {eta_flag,
                  "verified with generic c (the q1 series vanishes "
                  "identically at c = 0); spin statement follows by "
                  "specialization"}});
  reg.push_back({"T2.8-4", geom(22, 1, Variant::q1_even, rnd),
                 {{"r1", R(-24)}, {"r2", R(-196632)}},
                 {eta_flag}});
  reg.push_back({"T2.8-5", geom(14, 2, Variant::q1_even, ps),
                 {{"r1", R(-24)}},
                 {eta_flag}});
  reg.push_back({"T2.9", geom(14, 1, Variant::q1_even_two, ps),
                 {{"r1", R(-24)}},
                 {eta_flag}});

  const std::vector<std::string> odd_assumptions = {
      "Z is simply connected",
      "c3(E, g, d) = 0",
      "modularity of the transgressed character consumed as an assumption",
      "analytic content not checked"};
  auto odd = [&](const std::string& id, int dim, int l, Variant v, const R& r1) {
    TheoremEntry e{id, geom(dim, l, v, ps), {{"r1", r1}}, odd_assumptions};
    reg.push_back(e);
  };
  odd("T3.2-1", 7, 1, Variant::q_odd, R(480));
  odd("T3.2-2", 11, 1, Variant::q_odd, R(-264));
  odd("T3.2-3", 19, 1, Variant::q_odd, R(-24));
  odd("T3.2-4", 11, 2, Variant::q_odd, R(-24));
  odd("T3.2-5", 11, 1, Variant::q_odd_two, R(-24));
  odd("T3.2-6", 9, 1, Variant::q1_odd, R(480));
  odd("T3.2-7", 13, 1, Variant::q1_odd, R(-264));
  odd("T3.2-8", 21, 1, Variant::q1_odd, R(-24));
  odd("T3.2-9", 13, 2, Variant::q1_odd, R(-24));
  odd("T3.2-10", 13, 1, Variant::q1_odd_two, R(-24));
  return reg;
}

}  // namespace

const std::vector<TheoremEntry>& theorem_registry() {
  static const std::vector<TheoremEntry> reg = make_registry();
  return reg;
}

const TheoremEntry* find_entry(const std::string& id) {
  for (const TheoremEntry& e : theorem_registry())
    if (e.id == id) return &e;
  return nullptr;
}

}  // namespace acert
