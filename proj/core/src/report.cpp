#include "acert/report.hpp"

#include <sstream>

#include <json.hpp>

namespace acert {

namespace {

constexpr const char* kVersion = "0.1.0";

nlohmann::ordered_json constants_json(
    const std::vector<std::pair<std::string, Rational>>& cs) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [name, value] : cs) j[name] = to_string(value);
  return j;
}

nlohmann::ordered_json cert_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["id"] = c.id;
  j["dimension"] = c.dimension;
  j["l"] = c.l;
  j["variant"] = c.variant;
  j["weight"] = c.weight;
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  for (const auto& [a, b] : c.basis) basis.push_back({{"e4", a}, {"e6", b}});
  j["basis"] = basis;
  j["constants"] = {{"expected", constants_json(c.expected)},
                    {"computed", constants_json(c.computed)}};
  j["orders_checked"] = c.orders_checked;
  j["backend"] = c.backend;
  j["seeds"] = c.seeds;
  j["assumptions"] = c.assumptions;
  j["verdict"] = c.pass ? "pass" : "fail";
  j["residual"] = c.residual;
  j["ms"] = c.ms;
  return j;
}

}  // namespace

std::string report_json(const std::vector<Certificate>& certs, const EngineOptions& opt) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["engine_options"] = {{"q_order", opt.q_order},
                         {"seed", opt.seed},
                         {"random_trials", opt.random_trials},
                         {"timings", opt.timings}};
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Certificate& c : certs) arr.push_back(cert_json(c));
  j["certificates"] = arr;
  return j.dump(2) + "\n";
}

std::string report_markdown(const std::vector<Certificate>& certs,
                            const EngineOptions& opt) {
  std::ostringstream os;
  os << "# Verification report\n\n";
  os << "Engine options: q-order " << opt.q_order << ", seed " << opt.seed
     << ", random trials " << opt.random_trials << ".\n";
  for (const Certificate& c : certs) {
    os << "\n## " << c.id << "\n\n";
    if (c.dimension > 0)
      os << "- geometry: dimension " << c.dimension << ", l = " << c.l << ", variant "
         << c.variant << "\n";
    else
      os << "- kind: " << c.variant << "\n";
    if (c.weight > 0) {
      os << "- weight " << c.weight << "; basis {";
      for (std::size_t i = 0; i < c.basis.size(); ++i)
        os << (i ? ", " : "") << "E4^" << c.basis[i].first << " E6^" << c.basis[i].second;
      os << "}\n";
    }
    if (!c.expected.empty()) {
      os << "- constants:";
      for (const auto& [name, v] : c.expected) {
        os << " " << name << " stated " << to_string(v);
        for (const auto& [n2, v2] : c.computed)
          if (n2 == name) os << " / solved " << to_string(v2);
        os << ";";
      }
      os << "\n";
    }
    os << "- backend " << c.backend;
    if (!c.seeds.empty()) {
      os << ", seeds";
      for (auto s : c.seeds) os << " " << s;
    }
    os << "; orders checked through q^" << c.orders_checked << "\n";
    for (const auto& a : c.assumptions) os << "- assumption: " << a << "\n";
    os << "- verdict: " << (c.pass ? "pass" : "fail") << "\n";
    if (c.residual != "0") os << "- residual: " << c.residual << "\n";
  }
  return os.str();
}

}  // namespace acert
