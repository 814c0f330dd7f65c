#include <benchmark/benchmark.h>

#include "lagten/epw.hpp"
#include "lagten/plane_curves.hpp"
#include "lagten/tens.hpp"

using namespace lagten;

namespace {

const ThreeConicResult& three_conic() {
  static const ThreeConicResult r = construct_3331();
  return r;
}

const LagrangianSubspace& three_conic_subspace() {
  static const LagrangianSubspace a = LagrangianSubspace::from_config(three_conic().field, three_conic().config);
  return a;
}

void BM_ExtensionMul(benchmark::State& state) {
  const FiniteField f = ext_field(29, static_cast<int>(state.range(0)), 1);
  Rng rng(1);
  auto a = f.random(rng), b = f.random_nonzero(rng);
  for (auto _ : state) {
    a = f.mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_ExtensionMul)->DenseRange(1, 6);

void BM_Det(benchmark::State& state) {
  const FiniteField f(101);
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  FMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.random(rng);
  for (auto _ : state) benchmark::DoNotOptimize(det(f, m));
}
BENCHMARK(BM_Det)->Arg(10)->Arg(20)->Arg(60);

void BM_ChartDeterminantDirect(benchmark::State& state) {
  const auto& f = three_conic().field;
  Rng rng(3);
  const Point x = random_point(f, 6, rng);
  for (auto _ : state) benchmark::DoNotOptimize(chart_determinant(f, three_conic_subspace(), x, 0));
}
BENCHMARK(BM_ChartDeterminantDirect);

void BM_ChartDeterminantReduced(benchmark::State& state) {
  const auto& f = three_conic().field;
  const ChartDeterminant g(f, three_conic_subspace(), 0);
  Rng rng(3);
  const Point x = random_point(f, 6, rng);
  for (auto _ : state) benchmark::DoNotOptimize(g(x));
}
BENCHMARK(BM_ChartDeterminantReduced);

void BM_Corank(benchmark::State& state) {
  const auto& f = three_conic().field;
  Rng rng(4);
  const Point x = random_point(f, 6, rng);
  for (auto _ : state) benchmark::DoNotOptimize(corank(f, three_conic_subspace(), x));
}
BENCHMARK(BM_Corank);

void BM_VerifyThreeConic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify(three_conic().field, three_conic().config));
}
BENCHMARK(BM_VerifyThreeConic)->Unit(benchmark::kMillisecond);

void BM_Interpolate(benchmark::State& state) {
  const FiniteField f(101);
  const int d = static_cast<int>(state.range(0));
  Rng rng(5);
  const MonomialBasis b(6, d);
  MultiPoly truth(6, d);
  for (std::size_t i = 0; i < b.size(); ++i) truth.set(b[i], f.random(rng));
  for (auto _ : state)
    benchmark::DoNotOptimize(interpolate_from(f, 6, d, [&](const Point& x) { return evaluate(f, truth, x); }, rng));
}
BENCHMARK(BM_Interpolate)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_EpwForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(epw_form(three_conic().field, three_conic_subspace()));
}
BENCHMARK(BM_EpwForm)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_SepticSystem(benchmark::State& state) {
  static const NodeSelection sel = select_winger_prime();
  const FiniteField f(sel.nodes.field);
  for (auto _ : state) benchmark::DoNotOptimize(forms_with_mult(f, 7, sel.nodes));
}
BENCHMARK(BM_SepticSystem)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
