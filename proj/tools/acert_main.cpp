#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acert/bundle.hpp"
#include "acert/report.hpp"
#include "acert/verifier.hpp"

namespace {

using namespace acert;

int write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream os(path, std::ios::binary);
  os << text;
  if (!os) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  return 0;
}

Backend parse_backend(const std::string& name) {
  if (name == "roots") return Backend::roots;
  if (name == "random") return Backend::random;
  return Backend::powersum;
}

std::vector<GeometrySpec> side_geometries() {
  auto mk = [](int dim, int l, Variant v, Backend b) {
    GeometrySpec g;
    g.dimension = dim;
    g.l = l;
    g.variant = v;
    g.backend = b;
    return g;
  };
  return {
      mk(8, 1, Variant::q_even, Backend::roots),
      mk(12, 1, Variant::q_even, Backend::roots),
      mk(12, 2, Variant::q_even, Backend::powersum),
      mk(10, 1, Variant::q1_even, Backend::roots),
      mk(14, 1, Variant::q1_even, Backend::powersum),
      mk(16, 1, Variant::q_even, Backend::random),
      mk(20, 1, Variant::q_even, Backend::random),
      mk(18, 1, Variant::q1_even, Backend::random),
      mk(22, 1, Variant::q1_even, Backend::random),
  };
}

int cmd_verify(const std::string& theorem, const std::string& backend,
               const std::string& format, const std::string& output,
               bool with_lemmas, bool with_sides, EngineOptions opt) {
  std::vector<TheoremEntry> entries;
  if (theorem == "all") {
    entries = theorem_registry();
  } else {
    const TheoremEntry* e = find_entry(theorem);
    if (e == nullptr) {
      std::cerr << "error: unknown theorem id '" << theorem << "'\n";
      return 1;
    }
    entries.push_back(*e);
  }
  if (!backend.empty())
    for (TheoremEntry& e : entries)
      if (!e.geom.is_odd()) e.geom.backend = parse_backend(backend);

  std::vector<Certificate> certs;
  if (with_lemmas) {
    auto lemmas = verify_expansion_lemmas(opt);
    certs.insert(certs.end(), lemmas.begin(), lemmas.end());
  }
  if (with_sides)
    for (const GeometrySpec& g : side_geometries())
      certs.push_back(verify_sides_equal(g, opt));
  auto thms = run_entries(entries, opt);
  certs.insert(certs.end(), thms.begin(), thms.end());

  std::string text = format == "markdown" ? report_markdown(certs, opt)
                                          : report_json(certs, opt);
  int rc = write_out(text, output);
  if (rc != 0) return rc;
  for (const Certificate& c : certs)
    if (!c.pass) return 2;
  return 0;
}

int cmd_list() {
  for (const TheoremEntry& e : theorem_registry()) {
    std::cout << e.id << "  dim " << e.geom.dimension << "  l " << e.geom.l << "  "
              << variant_name(e.geom.variant) << "  backend "
              << backend_name(e.geom.backend) << "  constants";
    for (const auto& [name, v] : e.expected) std::cout << " " << name << "=" << to_string(v);
    std::cout << "\n";
  }
  return 0;
}

int cmd_expand(const std::string& builder, int l, int power, int q_order) {
  const int t_cap = 8 * q_order + 7;
  BSeries s;
  if (builder == "theta") {
    s = theta_big_tensor_expansion(t_cap);
  } else if (builder == "q1-kernel") {
    s = q1_kernel_expansion(t_cap);
  } else if (builder == "bracket") {
    s = witten_bracket_expansion(l, 1, t_cap);
  } else if (builder == "qe") {
    s = qe_expansion(t_cap);
  } else if (builder == "euler") {
    s = euler_power_expansion(power, t_cap);
  } else {
    std::cerr << "error: unknown builder '" << builder << "'\n";
    return 1;
  }
  for (const auto& [t, e] : s.entries())
    std::cout << "t^" << t << ": " << e.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for modular characteristic q-series"};
  app.require_subcommand(1);

  std::string theorem = "all", backend, format = "json", output, builder = "theta";
  bool with_lemmas = false, with_sides = false;
  int expand_l = 1, expand_power = 8, expand_q_order = 3;
  acert::EngineOptions opt;

  CLI::App* verify = app.add_subcommand("verify", "run verifications, write a report");
  verify->add_option("--theorem", theorem, "registry id or 'all'");
  verify->add_option("--backend", backend, "override backend for even entries")
      ->check(CLI::IsMember({"roots", "powersum", "random"}));
  verify->add_option("--q-order", opt.q_order, "q-expansion order")->check(CLI::Range(1, 4));
  verify->add_option("--seed", opt.seed, "randomized-backend base seed");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "markdown"}));
  verify->add_option("--output", output, "report path (stdout when absent)");
  verify->add_flag("--timings", opt.timings, "record wall-clock ms (non-deterministic)");
  verify->add_flag("--with-lemmas", with_lemmas, "include the expansion-lemma suite");
  verify->add_flag("--with-sides", with_sides, "include the side-equality suite");

  CLI::App* list = app.add_subcommand("list", "print the theorem registry");

  CLI::App* expand = app.add_subcommand("expand", "dump a builder's q-expansion");
  expand->add_option("--builder", builder, "theta | q1-kernel | bracket | qe | euler");
  expand->add_option("--l", expand_l)->check(CLI::Range(1, 3));
  expand->add_option("--power", expand_power, "Euler-product power");
  expand->add_option("--q-order", expand_q_order)->check(CLI::Range(1, 4));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (verify->parsed())
      return cmd_verify(theorem, backend, format, output, with_lemmas, with_sides, opt);
    if (list->parsed()) return cmd_list();
    if (expand->parsed()) return cmd_expand(builder, expand_l, expand_power, expand_q_order);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
