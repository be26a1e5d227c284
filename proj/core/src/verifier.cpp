#include "acert/verifier.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <sstream>

#include "acert/modular.hpp"
#include "acert/newton_convert.hpp"
#include "acert/theta.hpp"

namespace acert {

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
      .count();
}

RingPtr single_z_ring(int degree_cap) {
  return make_ring({{"z", 2, GenKind::chern_root}}, degree_cap);
}

Rational z_power_coeff(const FormPolynomial& p, unsigned e) {
  for (const auto& [m, c] : p.terms())
    if (m.e[0] == e) return c;
  return Rational(0);
}

// Rebuilds prod_j f(z -> root_j) in power-sum coordinates: with
// log f = sum_m phi_m(q) z^{2m}, the product is exp(sum_m phi_m P_m).
FormQSeries exp_log_family(const ChContext& ctx, const FormQSeries& factor,
                           const std::function<FormPolynomial(int)>& pm) {
  FormQSeries lf = series_log(factor);
  FormQSeries sum(ctx.ring, ctx.t_cap());
  for (const auto& [e, p] : lf.entries())
    for (int m = 1; m <= ctx.max_m(); ++m) {
      Rational r = z_power_coeff(p, static_cast<unsigned>(2 * m));
      if (!(r == 0)) sum.add_entry(e, pm(m).scaled(r));
    }
  return series_exp(sum);
}

FormQSeries pow_series(const FormQSeries& s, int n) {
  FormQSeries r = FormQSeries::one(s.ring(), s.t_cap());
  for (int i = 0; i < n; ++i) r *= s;
  return r;
}

const ThetaKind kThetaKinds[3] = {ThetaKind::theta1, ThetaKind::theta2,
                                  ThetaKind::theta3};

FormQSeries theta_side_q(ChCalculator& calc) {
  const ChContext& ctx = calc.context();
  const GeometrySpec& g = ctx.geom;
  const RingPtr& R = ctx.ring;
  const int T = ctx.t_cap();

  FormQSeries line = g.is_q1() ? theta_odd_line_factor(R, ctx.c_gen, T)
                               : FormQSeries::one(R, T);
  if (!g.is_q1())
    for (ThetaKind kind : kThetaKinds) line *= theta_ratio_line(kind, R, ctx.c_gen, T);

  if (ctx.uses_roots()) {
    FormQSeries q = line;
    for (int gen : ctx.x_gens) q *= theta_factor_ahat(R, gen, T);
    for (const auto& roots : ctx.u_gens) {
      FormQSeries bracket(R, T);
      for (ThetaKind kind : kThetaKinds) bracket += theta_product_v(kind, R, roots, T);
      q *= bracket;
    }
    return q;
  }

  RingPtr zr = single_z_ring(g.dimension);
  FormQSeries q = line * exp_log_family(ctx, theta_factor_ahat(zr, 0, T),
                                        [&](int m) { return power_sum_tz(ctx, m); });
  for (std::size_t b = 0; b < ctx.pv_gens.size(); ++b) {
    FormQSeries bracket(R, T);
    for (ThetaKind kind : kThetaKinds) {
      FormQSeries scalar = pow_series(theta_series(kind, R, -1, T), 8 * g.l);
      bracket += scalar * exp_log_family(
                              ctx, theta_ratio_line(kind, zr, 0, T),
                              [&](int m) { return power_sum_v(ctx, static_cast<int>(b), m); });
    }
    q *= bracket;
  }
  return q;
}

FormQSeries bundle_side_q(ChCalculator& calc) {
  const GeometrySpec& g = calc.context().geom;
  FormQSeries q = calc.theta_big_tensor() * calc.euler_series(g.euler_power());
  for (int b = 0; b < g.bundle_count(); ++b) q *= calc.witten_bracket(b);
  return q.scaled_poly(calc.ahat() * calc.exp_half_c());
}

// Solves a = r * b; symbolic verification. False if b = 0 or no such r.
bool solve_ratio(const FormPolynomial& a, const FormPolynomial& b, Rational& r) {
  if (b.is_zero()) return false;
  const auto& [m, c] = *b.terms().begin();
  auto it = a.terms().find(m);
  r = it == a.terms().end() ? Rational(0) : it->second / c;
  return a == b.scaled(r);
}

// Solves a2 = A a0 + B a1 with a0, a1 independent; symbolic verification.
bool solve_pair(const FormPolynomial& a0, const FormPolynomial& a1,
                const FormPolynomial& a2, Rational& A, Rational& B) {
  for (const auto& [m1, c01] : a0.terms()) {
    auto i11 = a1.terms().find(m1);
    Rational c11 = i11 == a1.terms().end() ? Rational(0) : i11->second;
    for (const auto& [m2, c12] : a1.terms()) {
      if (m2 == m1) continue;
      auto i02 = a0.terms().find(m2);
      Rational c02 = i02 == a0.terms().end() ? Rational(0) : i02->second;
      Rational det = c01 * c12 - c02 * c11;
      if (det == 0) continue;
      auto at = [](const FormPolynomial& p, const Monomial& m) {
        auto it = p.terms().find(m);
        return it == p.terms().end() ? Rational(0) : it->second;
      };
      Rational y1 = at(a2, m1), y2 = at(a2, m2);
      A = (y1 * c12 - y2 * c11) / det;
      B = (y2 * c01 - y1 * c02) / det;
      return a2 == a0.scaled(A) + a1.scaled(B);
    }
  }
  return false;
}

std::string poly_str(const FormPolynomial& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace

FormQSeries build_q(ChCalculator& calc, Side side) {
  return side == Side::theta ? theta_side_q(calc) : bundle_side_q(calc);
}

FormQSeries top_components(const FormQSeries& s, int dimension) {
  FormQSeries r(s.ring(), s.t_cap());
  for (const auto& [e, p] : s.entries()) r.set(e, p.degree_component(dimension));
  return r;
}

Certificate verify_sides_equal(const GeometrySpec& g0, const EngineOptions& opt) {
  auto start = Clock::now();
  GeometrySpec g = g0;
  g.q_order = opt.q_order;
  g.seed = opt.seed;

  Certificate cert;
  cert.id = "S-" + std::to_string(g.dimension) + "-" + std::to_string(g.l) + "-" +
            variant_name(g.variant);
  cert.dimension = g.dimension;
  cert.l = g.l;
  cert.variant = variant_name(g.variant);
  cert.orders_checked = opt.q_order;
  cert.backend = backend_name(g.backend);

  const bool randomized = g.backend == Backend::random;
  GeometrySpec gb = g;
  if (randomized) {
    gb.backend = Backend::powersum;
    for (int s = 0; s < opt.random_trials; ++s) cert.seeds.push_back(opt.seed + s);
  }
  ChCalculator calc(gb);
  FormQSeries diff = build_q(calc, Side::theta) - build_q(calc, Side::bundle);

  bool match = true;
  bool off_class = false;
  int first_bad = -1;
  for (const auto& [e, p] : diff.entries()) {
    for (int d = 0; d <= g.dimension; ++d) {
      FormPolynomial comp = p.degree_component(d);
      if (comp.is_zero()) continue;
      if (d % 4 != g.dimension % 4) {
        off_class = true;
        continue;
      }
      bool zero = true;
      if (randomized) {
        for (std::uint64_t s : cert.seeds)
          if (!(random_evaluate(comp, calc.context(), s) == 0)) zero = false;
      } else {
        zero = false;
      }
      if (!zero) {
        match = false;
        if (first_bad < 0) first_bad = e;
      }
    }
  }
  cert.pass = match;
  if (!match) {
    cert.residual = "first mismatch in the matched degree class at t^" +
                    std::to_string(first_bad);
  } else if (off_class) {
    cert.residual =
        "difference confined to degrees == dim+2 (mod 4): exp(c/2) on the "
        "bundle side vs the even/odd theta line factor; killed by top-degree "
        "extraction";
  }
  cert.assumptions.push_back(
      "equality asserted on degree components == dim (mod 4) per q-power");
  if (opt.timings) cert.ms = elapsed_ms(start);
  return cert;
}

namespace {

BundleExpr w0_expr() {
  Atom xi{AtomTag::XiC, 1};
  return BundleExpr::atom({AtomTag::TCZ, 1}, true) +
         BundleExpr::lambda(xi, true, 2).scaled(2) -
         BundleExpr::atom(xi, true) * BundleExpr::atom(xi, true) +
         BundleExpr::atom(xi, true);
}

BundleExpr b_expr() {
  Atom t{AtomTag::TCZ, 1}, xi{AtomTag::XiC, 1};
  BundleExpr T = BundleExpr::atom(t, true);
  BundleExpr X = BundleExpr::atom(xi, true);
  BundleExpr l2 = BundleExpr::lambda(xi, true, 2);
  return BundleExpr::sym(t, true, 2) + T + (l2.scaled(2) - X * X + X) * T + l2 * l2 +
         BundleExpr::lambda(xi, true, 4).scaled(2) -
         X * BundleExpr::lambda(xi, true, 3).scaled(2) + X * l2.scaled(2) -
         X * X * X + X + l2;
}

BundleExpr bracket_q1_expr(int l, int v_index) {
  Atom v{AtomTag::VC, v_index};
  BundleExpr r = BundleExpr::lambda(v, false, 2).scaled(2);
  if (l == 1) r += BundleExpr::atom({AtomTag::DeltaV, v_index});
  return r;
}

BundleExpr bracket_q2_expr(int l, int v_index) {
  Atom v{AtomTag::VC, v_index};
  BundleExpr dv = BundleExpr::atom({AtomTag::DeltaV, v_index});
  BundleExpr r = BundleExpr::lambda(v, false, 4).scaled(2) +
                 BundleExpr::atom(v) * BundleExpr::atom(v) * BundleExpr::constant(2);
  if (l == 1) r += dv * BundleExpr::atom(v);
  if (l == 2) r += dv;
  return r;
}

BundleExpr b1_expr() {
  BundleExpr w0 = w0_expr();
  BundleExpr bq1 = bracket_q1_expr(1, 1);
  return BundleExpr::constant(20) + b_expr() - w0.scaled(8) - bq1.scaled(8) +
         bq1 * w0 + bracket_q2_expr(1, 1);
}

BundleExpr b2_expr() {
  BundleExpr w0 = w0_expr();
  BundleExpr bq1 = bracket_q1_expr(2, 1);
  return BundleExpr::constant(104) + b_expr() - w0.scaled(16) - bq1.scaled(16) +
         bq1 * w0 + bracket_q2_expr(2, 1);
}

BundleExpr q1_kernel_q1_expr() {
  return BundleExpr::atom({AtomTag::TCZ, 1}, true) -
         BundleExpr::atom({AtomTag::XiC, 1}, true);
}

// The printed q^2 coefficient of the q1 series (l = 1); it omits the cross
// term (TCZ~ - XiC~)(x)(D(V) + 2 L2(VC)) that the product of the kernel's
// q^1 and the bracket's q^1 contributes.
BundleExpr b3_printed_expr() {
  Atom t{AtomTag::TCZ, 1}, xi{AtomTag::XiC, 1};
  BundleExpr T = BundleExpr::atom(t, true);
  BundleExpr X = BundleExpr::atom(xi, true);
  BundleExpr bq1 = bracket_q1_expr(1, 1);
  return BundleExpr::constant(20) - T.scaled(7) + BundleExpr::lambda(xi, true, 2) +
         X.scaled(7) - T * X + BundleExpr::sym(t, true, 2) - bq1.scaled(8) +
         bracket_q2_expr(1, 1);
}

BundleExpr g1_expr() {
  Atom e{AtomTag::EC, 1};
  BundleExpr E = BundleExpr::atom(e, true);
  return E + BundleExpr::lambda(e, true, 2).scaled(2) - E * E;
}

BundleExpr delta_e_expr() { return BundleExpr::atom({AtomTag::DeltaE, 1}); }

// The unit-normalized combined even-variant series: kernel (x) Euler factor
// (x) brackets with the bracket q^0 taken as 1.
BSeries combined_even_series(bool q1, int l, int bundles, int t_cap) {
  BSeries s = q1 ? q1_kernel_expansion(t_cap) : theta_big_tensor_expansion(t_cap);
  s *= euler_power_expansion(8 * l * bundles, t_cap);
  for (int b = 1; b <= bundles; ++b) {
    BSeries w = witten_bracket_expansion(l, b, t_cap);
    w.add_entry(0, BundleExpr::constant(-1));
    s *= w;
  }
  return s;
}

// The q^1 bundle of the even-variant expansion, i.e. the theorem's bracket.
BundleExpr expected_w_expr(const GeometrySpec& g) {
  BundleExpr w = g.is_q1() ? q1_kernel_q1_expr() : w0_expr();
  w += BundleExpr::constant(-Int(g.euler_power()));
  for (int b = 1; b <= g.bundle_count(); ++b) w += bracket_q1_expr(g.l, b);
  return w;
}

Certificate lemma_cert(const std::string& id, bool ok, const std::string& residual,
                       std::vector<std::string> assumptions) {
  Certificate c;
  c.id = id;
  c.variant = "expansion-lemma";
  c.backend = "symbolic";
  c.pass = ok;
  c.residual = ok && residual.empty() ? "0" : residual;
  if (!ok && c.residual == "0") c.residual = "structural mismatch";
  c.assumptions = std::move(assumptions);
  return c;
}

}  // namespace

std::vector<Certificate> verify_expansion_lemmas(const EngineOptions& opt) {
  const int t_cap = 8 * opt.q_order + 7;
  std::vector<Certificate> certs;
  auto check = [&](const std::string& id, const BundleExpr& got,
                   const BundleExpr& want, std::vector<std::string> assumptions = {}) {
    bool ok = got == want;
    std::string res;
    if (!ok) res = "derived: " + (got - want).str() + " over the stated form";
    certs.push_back(lemma_cert(id, ok, res, std::move(assumptions)));
  };

  BSeries theta = theta_big_tensor_expansion(t_cap);
  check("L-theta-q0", theta.q_coefficient(0), BundleExpr::constant(1));
  check("L-theta-q1", theta.q_coefficient(1), w0_expr());
  check("L-theta-q2", theta.q_coefficient(2), b_expr());

  for (int l : {1, 2}) {
    BSeries e = euler_power_expansion(8 * l, t_cap);
    bool ok = e.q_coefficient(0) == BundleExpr::constant(1) &&
              e.q_coefficient(1) == BundleExpr::constant(-8 * l) &&
              e.q_coefficient(2) == BundleExpr::constant(4 * l * (8 * l - 3));
    certs.push_back(lemma_cert("L-euler-" + std::to_string(8 * l), ok,
                               ok ? "" : "coefficient mismatch", {}));
  }

  for (int l : {1, 2}) {
    BSeries w = witten_bracket_expansion(l, 1, t_cap);
    std::string id = "L-bracket-l" + std::to_string(l);
    bool ok = w.q_coefficient(0) == BundleExpr::constant(2) &&
              w.q_coefficient(1) == bracket_q1_expr(l, 1) &&
              w.q_coefficient(2) == bracket_q2_expr(l, 1);
    certs.push_back(lemma_cert(
        id, ok, ok ? "" : "coefficient mismatch",
        {"as-built q0 constant is 2 (two half-integer families); the printed "
         "expansion normalizes it to 1"}));
  }

  check("L-combined-q2-l1", combined_even_series(false, 1, 1, t_cap).q_coefficient(2),
        b1_expr());
  check("L-combined-q2-l2", combined_even_series(false, 2, 1, t_cap).q_coefficient(2),
        b2_expr());

  BSeries k1 = q1_kernel_expansion(t_cap);
  check("L-q1-kernel-q1", k1.q_coefficient(1), q1_kernel_q1_expr());
  {
    BundleExpr derived = combined_even_series(true, 1, 1, t_cap).q_coefficient(2);
    BundleExpr corrected =
        b3_printed_expr() + q1_kernel_q1_expr() * bracket_q1_expr(1, 1);
    bool ok = derived == corrected;
    BundleExpr gap = derived - b3_printed_expr();
    certs.push_back(lemma_cert(
        "L-combined-q2-q1", ok,
        ok ? "printed form differs from the derivation by the cross term " +
                 gap.str() + "; certified against the corrected form"
           : "derived form does not match the corrected statement",
        {"the printed q^2 coefficient omits the kernel-q1 (x) bracket-q1 "
         "cross term"}));
  }

  BSeries qe = qe_expansion(t_cap);
  check("L-odd-qe-q0", qe.q_coefficient(0), delta_e_expr());
  check("L-odd-qe-q1", qe.q_coefficient(1), delta_e_expr() * g1_expr(),
        {"rank-N independence: reduced atoms are kept opaque, so the "
         "expansion is identical for every even N"});
  {
    // Rank homomorphism sanity for two sample ranks of the trivial bundle.
    bool ok = true;
    for (Int n : {Int(4), Int(6)}) {
      auto rank_of = [&](Atom a) {
        if (a.tag == AtomTag::EC) return n;
        if (a.tag == AtomTag::DeltaE) return pow_int(2, n == 4 ? 2u : 3u);
        throw structural_error("unexpected atom");
      };
      if (bundle_rank(qe.q_coefficient(1), rank_of) != 0) ok = false;
    }
    certs.push_back(lemma_cert("L-odd-qe-rank", ok,
                               ok ? "" : "reduced q^1 bundle has nonzero rank", {}));
  }

  // Numeric cross-check: ch of the derived and stated q^2 bundles agree in a
  // dim-8 geometry (redundant with the structural equality, but exercises the
  // character route end to end).
  {
    GeometrySpec g;
    g.dimension = 8;
    g.l = 1;
    g.variant = Variant::q_even;
    g.backend = Backend::powersum;
    g.q_order = opt.q_order;
    ChCalculator calc(g);
    bool ok =
        calc.ch(combined_even_series(false, 1, 1, t_cap).q_coefficient(2)) ==
        calc.ch(b1_expr());
    certs.push_back(
        lemma_cert("L-combined-q2-ch", ok, ok ? "" : "character mismatch", {}));
  }
  return certs;
}

Certificate verify_theorem(const TheoremEntry& entry, const EngineOptions& opt) {
  auto start = Clock::now();
  GeometrySpec g = entry.geom;
  g.q_order = opt.q_order;
  g.seed = opt.seed;

  Certificate cert;
  cert.id = entry.id;
  cert.dimension = g.dimension;
  cert.l = g.l;
  cert.variant = variant_name(g.variant);
  cert.weight = weight_of(g);
  cert.orders_checked = opt.q_order;
  cert.backend = backend_name(g.backend);
  cert.expected = entry.expected;
  cert.assumptions = entry.assumptions;
  cert.assumptions.push_back(
      "as-built normalization: bracket q0 = 2 per bundle (printed expansions "
      "use 1); the checked relations are homogeneous, so the scale drops out");

  const WeightBasis wb = weight_basis(cert.weight, opt.q_order);
  cert.basis = wb.pairs;
  const CoefficientRelation rel = coefficient_relation(cert.weight, opt.q_order);
  const bool randomized = g.backend == Backend::random;
  if (randomized)
    for (int s = 0; s < opt.random_trials; ++s) cert.seeds.push_back(opt.seed + s);

  bool pass = true;
  std::ostringstream residual;

  auto record_fail = [&](const std::string& what) {
    pass = false;
    if (residual.tellp() > 0) residual << "; ";
    residual << what;
  };

  auto run_reading = [&](bool xi_trivial, bool record_constants) {
    GeometrySpec gg = g;
    gg.xi_trivial = xi_trivial;
    GeometrySpec gps = gg;
    gps.backend = Backend::powersum;
    ChCalculator ps_calc(gps);

    std::vector<FormPolynomial> a;
    FormQSeries top(ps_calc.ring(), gg.t_cap());
    if (gg.backend == Backend::roots) {
      ChCalculator r_calc(gg);
      FormQSeries q = build_q(r_calc, Side::theta);
      FormQSeries rtop = top_components(q, gg.dimension);
      if (!rtop.is_integral())
        record_fail("half-integral q-powers survive in top degree");
      for (int n = 0; n <= opt.q_order; ++n)
        a.push_back(apply_constraint(
            newton_convert(rtop.q_coefficient(n), r_calc.context(), ps_calc.context()),
            ps_calc.context()));
    } else {
      FormQSeries q = build_q(ps_calc, Side::theta);
      top = top_components(q, gg.dimension);
      if (!top.is_integral())
        record_fail("half-integral q-powers survive in top degree");
      for (int n = 0; n <= opt.q_order; ++n)
        a.push_back(apply_constraint(top.q_coefficient(n), ps_calc.context()));
    }

    const int d = rel.dim;
    for (int j = d; j <= opt.q_order; ++j) {
      FormPolynomial res = a[static_cast<std::size_t>(j)];
      for (int i = 0; i < d; ++i)
        res -= a[static_cast<std::size_t>(i)].scaled(
            rel.higher[static_cast<std::size_t>(j - d)][static_cast<std::size_t>(i)]);
      bool zero = res.is_zero();
      if (!zero && randomized) {
        zero = true;
        for (std::uint64_t s : cert.seeds)
          if (!(random_evaluate(res, ps_calc.context(), s) == 0)) zero = false;
      }
      if (!zero)
        record_fail("weight-" + std::to_string(cert.weight) + " relation fails at q^" +
                    std::to_string(j) +
                    (xi_trivial ? " (spin reading)" : ""));
    }

    // Solve the leading constants from the series itself.
    std::vector<std::pair<std::string, Rational>> solved;
    if (d == 1) {
      for (int j = 1; j <= opt.q_order && j <= 2; ++j) {
        Rational r;
        if (solve_ratio(a[static_cast<std::size_t>(j)], a[0], r))
          solved.emplace_back("r" + std::to_string(j), r);
        else
          record_fail("q^" + std::to_string(j) + " is not a rational multiple of q^0");
      }
    } else if (d == 2 && opt.q_order >= 2) {
      Rational A, B;
      if (solve_pair(a[0], a[1], a[2], A, B)) {
        solved.emplace_back("A", A);
        solved.emplace_back("B", B);
      } else {
        record_fail("leading coefficients do not determine a unique (A, B)");
      }
    }
    for (const auto& [name, want] : entry.expected) {
      bool found = false;
      for (const auto& [n, got] : solved)
        if (n == name) {
          found = true;
          if (!(got == want))
            record_fail(name + " = " + to_string(got) + ", stated " + to_string(want) +
                        (xi_trivial ? " (spin reading)" : ""));
        }
      if (!found) record_fail("constant " + name + " not solvable from the series");
    }
    if (record_constants) cert.computed = solved;
  };

  run_reading(g.xi_trivial, true);
  if (entry.both_xi_readings) run_reading(!g.xi_trivial, false);

  cert.pass = pass;
  if (!pass) cert.residual = residual.str();
  if (opt.timings) cert.ms = elapsed_ms(start);
  return cert;
}

Certificate emit_odd_identity(const TheoremEntry& entry, const EngineOptions& opt) {
  auto start = Clock::now();
  GeometrySpec g = entry.geom;
  g.q_order = opt.q_order;

  Certificate cert;
  cert.id = entry.id;
  cert.dimension = g.dimension;
  cert.l = g.l;
  cert.variant = variant_name(g.variant);
  cert.weight = weight_of(g);
  cert.orders_checked = 1;
  cert.backend = "symbolic";
  cert.expected = entry.expected;
  cert.assumptions = entry.assumptions;
  cert.assumptions.push_back(
      "transgressed characters handled as opaque graded symbols");

  const WeightBasis wb = weight_basis(cert.weight, opt.q_order);
  cert.basis = wb.pairs;
  const CoefficientRelation rel = coefficient_relation(cert.weight, opt.q_order);

  bool pass = true;
  std::ostringstream residual;
  auto record_fail = [&](const std::string& what) {
    pass = false;
    if (residual.tellp() > 0) residual << "; ";
    residual << what;
  };

  const int t_cap = g.t_cap();
  BSeries odd = combined_even_series(g.is_q1(), g.l, g.bundle_count(), t_cap) *
                qe_expansion(t_cap);

  BundleExpr de = delta_e_expr();
  if (!(odd.q_coefficient(0) == de)) record_fail("q^0 bundle is not the spinor symbol");
  BundleExpr want_q1 = de * g1_expr() + expected_w_expr(g) * de;
  if (!(odd.q_coefficient(1) == want_q1))
    record_fail("q^1 bundle differs from the stated form by " +
                (odd.q_coefficient(1) - want_q1).str());

  std::vector<std::pair<std::string, Rational>> solved;
  if (rel.dim == 1) {
    solved.emplace_back("r1", rel.higher[0][0]);
    if (opt.q_order >= 2) solved.emplace_back("r2", rel.higher[1][0]);
  }
  for (const auto& [name, want] : entry.expected) {
    bool found = false;
    for (const auto& [n, got] : solved)
      if (n == name) {
        found = true;
        if (!(got == want))
          record_fail(name + " = " + to_string(got) + ", stated " + to_string(want));
      }
    if (!found) record_fail("constant " + name + " not produced by the basis");
  }
  cert.computed = solved;

  cert.pass = pass;
  if (!pass) cert.residual = residual.str();
  if (opt.timings) cert.ms = elapsed_ms(start);
  return cert;
}

Certificate run_entry(const TheoremEntry& e, const EngineOptions& opt) {
  return e.geom.is_odd() ? emit_odd_identity(e, opt) : verify_theorem(e, opt);
}

std::vector<Certificate> run_entries(const std::vector<TheoremEntry>& entries,
                                     const EngineOptions& opt) {
  std::vector<std::future<Certificate>> futures;
  futures.reserve(entries.size());
  for (const TheoremEntry& e : entries)
    futures.push_back(
        std::async(std::launch::async, [&e, opt] { return run_entry(e, opt); }));
  std::vector<Certificate> out;
  out.reserve(entries.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

}  // namespace acert
