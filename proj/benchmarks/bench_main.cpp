#include <benchmark/benchmark.h>

#include "acert/char_calc.hpp"
#include "acert/qseries.hpp"
#include "acert/theta.hpp"
#include "acert/verifier.hpp"

namespace {

using namespace acert;

GeometrySpec dim8() {
  GeometrySpec g;
  g.dimension = 8;
  g.l = 1;
  g.variant = Variant::q_even;
  g.backend = Backend::powersum;
  return g;
}

void BM_PolynomialMultiply(benchmark::State& state) {
  RingPtr ring = make_ring({{"x", 2, GenKind::chern_root},
                            {"y", 2, GenKind::chern_root},
                            {"z", 2, GenKind::chern_root},
                            {"w", 2, GenKind::chern_root}},
                           int(state.range(0)));
  FormPolynomial sum(ring);
  for (std::size_t i = 0; i < ring->size(); ++i)
    sum += FormPolynomial::generator(ring, i);
  FormPolynomial p = poly_exp(sum);
  for (auto _ : state) benchmark::DoNotOptimize(p * p);
}
BENCHMARK(BM_PolynomialMultiply)->Arg(8)->Arg(16)->Arg(24);

void BM_SeriesInvert(benchmark::State& state) {
  RingPtr ring = make_ring({{"z", 2, GenKind::chern_root}}, 8);
  FormQSeries t1 = theta_series(ThetaKind::theta1, ring, 0, int(state.range(0)));
  FormQSeries unit = t1.shifted(-1).scaled(Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(series_invert(unit));
}
BENCHMARK(BM_SeriesInvert)->Arg(31)->Arg(63);

void BM_ThetaSideDim8(benchmark::State& state) {
  for (auto _ : state) {
    ChCalculator calc(dim8());
    benchmark::DoNotOptimize(build_q(calc, Side::theta));
  }
}
BENCHMARK(BM_ThetaSideDim8);

void BM_BundleSideDim8(benchmark::State& state) {
  for (auto _ : state) {
    ChCalculator calc(dim8());
    benchmark::DoNotOptimize(build_q(calc, Side::bundle));
  }
}
BENCHMARK(BM_BundleSideDim8);

}  // namespace

BENCHMARK_MAIN();
