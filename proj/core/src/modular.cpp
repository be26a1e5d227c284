#include "acert/modular.hpp"

#include <stdexcept>

namespace acert {

namespace {

Int sigma(int n, int k) {
  Int s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) s += pow_int(Int(d), static_cast<unsigned>(k));
  return s;
}

}  // namespace

RSeries eisenstein(int weight, int q_order) {
  if (weight != 4 && weight != 6)
    throw std::invalid_argument("eisenstein: weight must be 4 or 6");
  const int k = weight - 1;
  const Rational scale = weight == 4 ? Rational(240) : Rational(-504);
  RSeries e = RSeries::one(q_order + 1);
  for (int n = 1; n <= q_order; ++n)
    e[static_cast<std::size_t>(n)] = scale * Rational(sigma(n, k));
  return e;
}

WeightBasis weight_basis(int w, int q_order) {
  WeightBasis b;
  b.weight = w;
  const RSeries e4 = eisenstein(4, q_order);
  const RSeries e6 = eisenstein(6, q_order);
  for (int a = w / 4; a >= 0; --a) {
    const int rem = w - 4 * a;
    if (rem % 6 != 0) continue;
    const int bb = rem / 6;
    b.pairs.emplace_back(a, bb);
    b.expansions.push_back(e4.pow(a) * e6.pow(bb));
  }
  return b;
}

CoefficientRelation coefficient_relation(int w, int q_order) {
  const WeightBasis basis = weight_basis(w, q_order);
  const int d = basis.dim();
  if (d == 0) throw std::invalid_argument("coefficient_relation: empty basis");
  if (q_order < d)
    throw std::invalid_argument("coefficient_relation: q_order below basis size");

  // Invert the leading d x d coefficient matrix M[j][i] = q^j coeff of B_i.
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(d)),
      inv(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    m[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(d));
    inv[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(d), Rational(0));
    inv[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1;
    for (int i = 0; i < d; ++i)
      m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          basis.expansions[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int r = col; r < d; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      throw std::runtime_error("coefficient_relation: singular leading system");
    std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(pivot)]);
    std::swap(inv[static_cast<std::size_t>(col)], inv[static_cast<std::size_t>(pivot)]);
    const Rational p = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (int i = 0; i < d; ++i) {
      m[static_cast<std::size_t>(col)][static_cast<std::size_t>(i)] /= p;
      inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(i)] /= p;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      const Rational f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int i = 0; i < d; ++i) {
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] -=
            f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(i)];
        inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] -=
            f * inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(i)];
      }
    }
  }

  CoefficientRelation rel;
  rel.weight = w;
  rel.dim = d;
  for (int j = d; j <= q_order; ++j) {
    std::vector<Rational> row(static_cast<std::size_t>(d), Rational(0));
    for (int i = 0; i < d; ++i) {
      const Rational bj = basis.expansions[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (int col = 0; col < d; ++col)
        row[static_cast<std::size_t>(col)] +=
            bj * inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
    }
    rel.higher.push_back(std::move(row));
  }
  return rel;
}

int weight_of(const GeometrySpec& g) {
  return (g.bundle_count() == 2 ? 8 : 4) * g.l + 2 * g.k();
}

}  // namespace acert
