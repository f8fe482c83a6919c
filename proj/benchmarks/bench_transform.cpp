#include <benchmark/benchmark.h>

#include "hypspec/fg_tail.hpp"
#include "hypspec/multiplier.hpp"
#include "hypspec/transform.hpp"

#include <cmath>

using namespace hypspec;

static void BM_SphericalTransform(benchmark::State& state) {
  const auto r = default_radial_grid(static_cast<std::size_t>(state.range(0)));
  const auto kappa = RadialProfile::sample(r, [](double x) { return std::exp(-2.0 * x); });
  TransformOptions opts;
  opts.sigma_max = 64.0;
  opts.sigma_count = 2049;
  for (auto _ : state) benchmark::DoNotOptimize(spherical_transform_h3(kappa, opts));
}
BENCHMARK(BM_SphericalTransform)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

static void BM_MultiplierKernel(benchmark::State& state) {
  const auto F = polynomial_multiplier(3);
  std::vector<double> r;
  for (int i = 1; i <= 200; ++i) r.push_back(0.1 * i);
  for (auto _ : state) benchmark::DoNotOptimize(multiplier_kernel(2, F, 0.25, r));
}
BENCHMARK(BM_MultiplierKernel)->Unit(benchmark::kMillisecond);

static void BM_FarDiagonal(benchmark::State& state) {
  const auto F = gaussian_multiplier();
  for (auto _ : state) benchmark::DoNotOptimize(far_diagonal_norm(F, 1.0 / 64.0));
}
BENCHMARK(BM_FarDiagonal)->Unit(benchmark::kMillisecond);

static void BM_FgTail(benchmark::State& state) {
  const auto F = polynomial_multiplier(3);
  for (auto _ : state) benchmark::DoNotOptimize(FgTail(F, 1.0).tail(16.0));
}
BENCHMARK(BM_FgTail)->Unit(benchmark::kMillisecond);
