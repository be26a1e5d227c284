#include <doctest.h>

#include "acert/report.hpp"
#include "acert/verifier.hpp"

using namespace acert;

namespace {

GeometrySpec spec(int dim, int l, Variant v, Backend b) {
  GeometrySpec g;
  g.dimension = dim;
  g.l = l;
  g.variant = v;
  g.backend = b;
  return g;
}

Rational computed_value(const Certificate& c, const std::string& name) {
  for (const auto& [n, v] : c.computed)
    if (n == name) return v;
  FAIL("missing computed constant " << name);
  return Rational(0);
}

}  // namespace

TEST_CASE("expansion lemma suite is green") {
  EngineOptions opt;
  for (const Certificate& c : verify_expansion_lemmas(opt)) {
    INFO(c.id);
    CHECK(c.pass);
  }
}

TEST_CASE("the two sides of the index identity agree on both backends") {
  EngineOptions opt;
  for (Backend b : {Backend::roots, Backend::powersum}) {
    Certificate c = verify_sides_equal(spec(8, 1, Variant::q_even, b), opt);
    INFO(c.backend);
    CHECK(c.pass);
    // The line-factor parity confines the mismatch to the complementary
    // degree class; top-degree extraction never sees it.
    CHECK(c.residual.find("mod 4") != std::string::npos);
  }
}

TEST_CASE("degree-class concentration and half-integer cancellation") {
  GeometrySpec g = spec(8, 1, Variant::q_even, Backend::powersum);
  ChCalculator calc(g);
  FormQSeries bundle = build_q(calc, Side::bundle);
  FormQSeries theta = build_q(calc, Side::theta);
  FormQSeries diff = bundle - theta;
  for (const auto& [t, p] : diff.entries())
    for (int d = 0; d <= g.dimension; d += 2) {
      // Agreement holds exactly in degrees congruent to dim mod 4.
      if ((d - g.dimension) % 4 == 0) CHECK(p.degree_component(d).is_zero());
    }
  // Top components only involve integer q-powers: the half-integer families
  // cancel against each other.
  CHECK(top_components(theta, g.dimension).is_integral());
  CHECK(top_components(bundle, g.dimension).is_integral());
}

TEST_CASE("registry shape") {
  const auto& reg = theorem_registry();
  CHECK(reg.size() == 23);
  CHECK(find_entry("T2.3-1") != nullptr);
  CHECK(find_entry("T3.2-10") != nullptr);
  CHECK(find_entry("T9.9-9") == nullptr);
  for (const TheoremEntry& e : reg) {
    CHECK_NOTHROW(e.geom.validate());
    CHECK(!e.expected.empty());
  }
}

TEST_CASE("an even identity certifies with the stated constants") {
  EngineOptions opt;
  const TheoremEntry* e = find_entry("T2.3-1");
  REQUIRE(e != nullptr);
  Certificate c = verify_theorem(*e, opt);
  CHECK(c.pass);
  CHECK(c.weight == 8);
  CHECK(computed_value(c, "r1") == 480);
  CHECK(computed_value(c, "r2") == 61920);
  CHECK(c.orders_checked == opt.q_order);

  // Backend cross-agreement: the root-coordinate route solves the same
  // constants.
  TheoremEntry roots = *e;
  roots.geom.backend = Backend::roots;
  Certificate cr = verify_theorem(roots, opt);
  CHECK(cr.pass);
  CHECK(computed_value(cr, "r1") == 480);
  CHECK(computed_value(cr, "r2") == 61920);
}

TEST_CASE("a two-dimensional basis solves through the 2x2 system") {
  EngineOptions opt;
  const TheoremEntry* e = find_entry("T2.3-5");
  REQUIRE(e != nullptr);
  Certificate c = verify_theorem(*e, opt);
  CHECK(c.pass);
  CHECK(c.weight == 12);
  CHECK(c.basis.size() == 2);
  CHECK(computed_value(c, "A") == 196560);
  CHECK(computed_value(c, "B") == -24);
}

TEST_CASE("randomized backend records its seeds and stays deterministic") {
  EngineOptions opt;
  const TheoremEntry* e = find_entry("T2.3-3");
  REQUIRE(e != nullptr);
  Certificate a = verify_theorem(*e, opt);
  Certificate b = verify_theorem(*e, opt);
  CHECK(a.pass);
  CHECK(a.seeds.size() == std::size_t(opt.random_trials));
  CHECK(a.seeds == b.seeds);
  CHECK(a.computed == b.computed);
}

TEST_CASE("odd identities certify at the symbol level") {
  EngineOptions opt;
  const TheoremEntry* e = find_entry("T3.2-1");
  REQUIRE(e != nullptr);
  Certificate c = emit_odd_identity(*e, opt);
  CHECK(c.pass);
  CHECK(computed_value(c, "r1") == 480);
  bool saw_modularity_assumption = false;
  for (const auto& a : c.assumptions)
    if (a.find("modularity") != std::string::npos) saw_modularity_assumption = true;
  CHECK(saw_modularity_assumption);
}

TEST_CASE("reports are byte-stable") {
  EngineOptions opt;
  const TheoremEntry* e = find_entry("T2.3-6");
  REQUIRE(e != nullptr);
  std::vector<Certificate> certs{run_entry(*e, opt)};
  CHECK(report_json(certs, opt) == report_json(certs, opt));
  std::string json = report_json(certs, opt);
  CHECK(json.find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(json.find("\"ms\": 0") != std::string::npos);
  std::string md = report_markdown(certs, opt);
  CHECK(md.find("## T2.3-6") != std::string::npos);
}
