#include <benchmark/benchmark.h>

#include "hypspec/flow.hpp"

using namespace hypspec;

static void BM_IntegrateBump(benchmark::State& state) {
  const auto m = conformal_bump(2, BumpParams{});
  const ZeroPhasePoint start{0.5, {0.1, -0.2}, 0.3, {0.4, 0.5}};
  for (auto _ : state) benchmark::DoNotOptimize(integrate(m, start, 10.0));
}
BENCHMARK(BM_IntegrateBump)->Unit(benchmark::kMicrosecond);

static void BM_Shoot(benchmark::State& state) {
  const auto m = conformal_bump(2, BumpParams{});
  const PointPair pair{{0.3, {-0.3, 0.0}}, {0.6, {0.4, 0.1}}};
  for (auto _ : state) benchmark::DoNotOptimize(shoot_geodesic(m, pair));
}
BENCHMARK(BM_Shoot)->Unit(benchmark::kMillisecond);

static void BM_Nontrap(benchmark::State& state) {
  const auto m = exact_hyperbolic(2);
  NontrapOptions o;
  o.samples = 100;
  for (auto _ : state) benchmark::DoNotOptimize(certify_nontrapping(m, o));
}
BENCHMARK(BM_Nontrap)->Unit(benchmark::kMillisecond);
