#ifndef ACERT_VERIFIER_HPP
#define ACERT_VERIFIER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "acert/bundle.hpp"
#include "acert/char_calc.hpp"
#include "acert/geometry.hpp"

namespace acert {

// Machine-readable record that one identity was re-derived and matched.
struct Certificate {
  std::string id;
  int dimension = 0;
  int l = 1;
  std::string variant;
  int weight = 0;  // 0 when not applicable
  std::vector<std::pair<int, int>> basis;
  // Named constants (r1/r2 for one-dimensional bases, A/B for
  // two-dimensional ones), stated vs engine-solved.
  std::vector<std::pair<std::string, Rational>> expected;
  std::vector<std::pair<std::string, Rational>> computed;
  int orders_checked = 0;
  std::string backend;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> assumptions;
  bool pass = false;
  std::string residual = "0";
  long long ms = 0;
};

struct TheoremEntry {
  std::string id;
  GeometrySpec geom;
  std::vector<std::pair<std::string, Rational>> expected;
  std::vector<std::string> assumptions;
  // One entry certifies both the spin (c = 0) and the generic reading.
  bool both_xi_readings = false;
};

const std::vector<TheoremEntry>& theorem_registry();
const TheoremEntry* find_entry(const std::string& id);

struct EngineOptions {
  int q_order = 3;
  std::uint64_t seed = 1;
  int random_trials = 5;
  bool timings = false;
};

enum class Side { bundle, theta };

// The full q-series of the geometry (even variants): the bundle side goes
// through the Chern-character calculus, the theta side through the theta
// q-expansions. The two differ only in the degree classes killed by
// top-degree extraction (line-factor parity).
FormQSeries build_q(ChCalculator& calc, Side side);

// Keeps only the degree-(dim) component of every t-coefficient.
FormQSeries top_components(const FormQSeries& s, int dimension);

Certificate verify_sides_equal(const GeometrySpec& g, const EngineOptions& opt);
std::vector<Certificate> verify_expansion_lemmas(const EngineOptions& opt);
Certificate verify_theorem(const TheoremEntry& e, const EngineOptions& opt);
Certificate emit_odd_identity(const TheoremEntry& e, const EngineOptions& opt);

// Dispatches on the entry's variant (even -> verify_theorem, odd ->
// emit_odd_identity); optional backend override.
Certificate run_entry(const TheoremEntry& e, const EngineOptions& opt);
std::vector<Certificate> run_entries(const std::vector<TheoremEntry>& entries,
                                     const EngineOptions& opt);

}  // namespace acert

#endif
