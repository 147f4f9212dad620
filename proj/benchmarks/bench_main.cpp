#include <benchmark/benchmark.h>

#include <vector>

#include "twr/sampling.hpp"
#include "twr/thomas_wigner.hpp"

namespace {

void BM_MacfarlaneCosPsi(benchmark::State& state) {
  double g_uv = 1.25;
  double g_uw = 1.1;
  double g_vw = g_uv * g_uw;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g_uv);
    benchmark::DoNotOptimize(twr::macfarlane_cos_psi(g_uv, g_uw, g_vw));
  }
}
BENCHMARK(BM_MacfarlaneCosPsi);

void BM_GeometricProduct(benchmark::State& state) {
  twr::CaseRng rng(1, 0);
  const int dim = static_cast<int>(state.range(0));
  const auto a = twr::random_multivector(rng, dim);
  const auto b = twr::random_multivector(rng, dim);
  for (auto _ : state) benchmark::DoNotOptimize(twr::gp(a, b));
}
BENCHMARK(BM_GeometricProduct)->Arg(3)->Arg(4);

void BM_TwAngle(benchmark::State& state) {
  const std::vector<double> v{0.5, 0.1, -0.2};
  const std::vector<double> w{-0.1, 0.6, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(twr::tw_angle(v, w));
}
BENCHMARK(BM_TwAngle);

void BM_TwOracle(benchmark::State& state) {
  const std::vector<double> v{0.5, 0.1, -0.2};
  const std::vector<double> w{-0.1, 0.6, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(twr::tw_oracle(v, w));
}
BENCHMARK(BM_TwOracle);

void BM_TwVersor(benchmark::State& state) {
  const auto u = twr::SpacetimeVector::rest(4);
  const auto v = twr::four_velocity({0.5, 0.1, -0.2});
  const auto w = twr::four_velocity({-0.1, 0.6, 0.3});
  for (auto _ : state) benchmark::DoNotOptimize(twr::tw_versor(u, v, w));
}
BENCHMARK(BM_TwVersor);

}  // namespace

BENCHMARK_MAIN();
