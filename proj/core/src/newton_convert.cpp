#include "acert/newton_convert.hpp"

#include <algorithm>

namespace acert {

namespace {

// Elementary symmetric polynomials of {x_j^2} expanded in the roots.
std::vector<FormPolynomial> elementary_in_roots(const RingPtr& ring,
                                                const std::vector<int>& roots, int max_k) {
  std::vector<FormPolynomial> e(static_cast<std::size_t>(max_k) + 1,
                                FormPolynomial::zero(ring));
  e[0] = FormPolynomial::constant(ring, 1);
  for (int gen : roots) {
    FormPolynomial sq = FormPolynomial::generator(ring, static_cast<std::size_t>(gen), 2);
    for (int k = max_k; k >= 1; --k)
      e[static_cast<std::size_t>(k)] += e[static_cast<std::size_t>(k - 1)] * sq;
  }
  return e;
}

// Elementary symmetric functions written in the P generators via Newton's
// identities: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} P_i.
std::vector<FormPolynomial> elementary_in_powersums(const RingPtr& ring,
                                                    const std::vector<int>& p_gens,
                                                    int max_k) {
  std::vector<FormPolynomial> e(static_cast<std::size_t>(max_k) + 1,
                                FormPolynomial::zero(ring));
  e[0] = FormPolynomial::constant(ring, 1);
  for (int k = 1; k <= max_k; ++k) {
    FormPolynomial acc = FormPolynomial::zero(ring);
    for (int i = 1; i <= k; ++i) {
      FormPolynomial term =
          e[static_cast<std::size_t>(k - i)] *
          FormPolynomial::generator(ring, static_cast<std::size_t>(p_gens[i - 1]));
      acc += i % 2 == 1 ? term : -term;
    }
    e[static_cast<std::size_t>(k)] = acc.scaled(Rational(1, k));
  }
  return e;
}

struct Family {
  std::vector<int> roots;  // generator indices in the combined ring
  std::vector<FormPolynomial> e_roots;
  std::vector<FormPolynomial> e_powersums;
};

// Rewrites one root family of f into its power-sum images.
FormPolynomial convert_family(FormPolynomial f, const Family& fam) {
  const RingPtr& R = f.ring();
  FormPolynomial result = FormPolynomial::zero(R);
  const int max_k = static_cast<int>(fam.e_powersums.size()) - 1;

  auto root_part = [&fam](const Monomial& m) {
    std::vector<unsigned> part;
    part.reserve(fam.roots.size());
    for (int g : fam.roots) part.push_back(m.e[static_cast<std::size_t>(g)]);
    return part;
  };

  while (!f.is_zero()) {
    // Leading candidate: within the bucket of its non-family part, the
    // lexicographically largest family exponent vector.
    bool in_family = false;
    Monomial lead_m;
    std::vector<unsigned> lead_part;
    Monomial beta;
    for (const auto& [m, c] : f.terms()) {
      auto part = root_part(m);
      if (std::all_of(part.begin(), part.end(), [](unsigned x) { return x == 0; })) continue;
      Monomial b = m;
      for (int g : fam.roots) b.e[static_cast<std::size_t>(g)] = 0;
      if (!in_family || (b == beta && part > lead_part)) {
        if (!in_family) beta = b;
        if (b == beta) {
          in_family = true;
          lead_m = m;
          lead_part = part;
        }
      }
    }
    if (!in_family) break;

    for (unsigned x : lead_part)
      if (x % 2 != 0)
        throw conversion_error("odd root power; input is not even in the family");
    std::vector<unsigned> a;
    for (unsigned x : lead_part) a.push_back(x / 2);
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
      if (a[i] < a[i + 1])
        throw conversion_error("leading exponents not dominance-ordered; input is asymmetric");
    if (static_cast<int>(a[0]) > max_k)
      throw conversion_error("family power exceeds the available power-sum range");

    Rational coeff = f.terms().at(lead_m);
    FormPolynomial beta_poly = FormPolynomial::constant(R, 1);
    for (std::size_t i = 0; i < R->size(); ++i)
      if (beta.e[i]) beta_poly *= FormPolynomial::generator(R, i, beta.e[i]);
    FormPolynomial prod_roots = FormPolynomial::constant(R, 1);
    FormPolynomial prod_ps = FormPolynomial::constant(R, 1);
    for (std::size_t k = 0; k < a.size(); ++k) {
      unsigned mult = a[k] - (k + 1 < a.size() ? a[k + 1] : 0);
      for (unsigned j = 0; j < mult; ++j) {
        prod_roots *= fam.e_roots[k + 1];
        prod_ps *= fam.e_powersums[k + 1];
      }
    }
    f -= prod_roots.scaled(coeff) * beta_poly;
    result += prod_ps.scaled(coeff) * beta_poly;
  }
  return result + f;
}

}  // namespace

FormPolynomial newton_convert(const FormPolynomial& f, const ChContext& roots_ctx,
                              const ChContext& ps_ctx) {
  if (!roots_ctx.uses_roots() || ps_ctx.uses_roots())
    throw conversion_error("newton_convert needs a roots source and a powersum target");
  check_compatible(roots_ctx.ring, f.ring());

  // Combined ring: the roots generators followed by the power-sum ones.
  std::vector<Generator> gens = roots_ctx.ring->generators();
  std::vector<std::vector<int>> p_idx;
  auto append = [&gens](const std::vector<int>& src, const RingPtr& from) {
    std::vector<int> out;
    for (int g : src) {
      gens.push_back(from->gen(static_cast<std::size_t>(g)));
      out.push_back(static_cast<int>(gens.size()) - 1);
    }
    return out;
  };
  p_idx.push_back(append(ps_ctx.pt_gens, ps_ctx.ring));
  for (const auto& fam : ps_ctx.pv_gens) p_idx.push_back(append(fam, ps_ctx.ring));
  RingPtr combined = make_ring(std::move(gens), roots_ctx.ring->degree_cap());

  FormPolynomial g = f.mapped_into(combined);
  std::vector<std::vector<int>> root_fams{roots_ctx.x_gens};
  for (const auto& fam : roots_ctx.u_gens) root_fams.push_back(fam);
  for (std::size_t i = 0; i < root_fams.size(); ++i) {
    Family fam;
    fam.roots = root_fams[i];
    int max_k = std::min<int>(static_cast<int>(p_idx[i].size()),
                              static_cast<int>(fam.roots.size()));
    fam.e_roots = elementary_in_roots(combined, fam.roots, max_k);
    fam.e_powersums = elementary_in_powersums(combined, p_idx[i], max_k);
    g = convert_family(std::move(g), fam);
  }

  // Project onto the powersum ring; any residual root generator is a bug in
  // the reduction and must not pass silently.
  FormPolynomial out(ps_ctx.ring);
  for (const auto& [m, c] : g.terms()) {
    Monomial t;
    for (std::size_t i = 0; i < combined->size(); ++i) {
      if (!m.e[i]) continue;
      int j = ps_ctx.ring->find(combined->gen(i).name);
      if (j < 0) throw conversion_error("unreduced root generator after conversion");
      t.e[static_cast<std::size_t>(j)] = m.e[i];
    }
    out.add_term(t, c);
  }
  return out;
}

}  // namespace acert
