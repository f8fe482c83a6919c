#include <benchmark/benchmark.h>

#include "hypspec/kernels.hpp"
#include "hypspec/oscillatory.hpp"
#include "hypspec/grid.hpp"

#include <cmath>

using namespace hypspec;

static void BM_SpectralMeasure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  kernel_symbol(n);
  double r = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral_measure(n, 3.7, r));
    r = r < 20.0 ? r * 1.01 : 0.1;
  }
}
BENCHMARK(BM_SpectralMeasure)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

static void BM_Resolvent(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(resolvent_kernel(n, {1.5, 0.3}, 2.0));
}
BENCHMARK(BM_Resolvent)->Arg(2)->Arg(6);

static void BM_HeatSpectral(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(heat_kernel_spectral(4, 0.7, 1.3));
}
BENCHMARK(BM_HeatSpectral);

static void BM_FilonGrid(benchmark::State& state) {
  const auto t = linspace(0.0, 1.0, static_cast<std::size_t>(state.range(0)));
  std::vector<double> g;
  for (double x : t) g.push_back(std::exp(-x * x));
  const SplineFilon s(t, g);
  for (auto _ : state) benchmark::DoNotOptimize(s.fourier_grid(0.5, 4096));
}
BENCHMARK(BM_FilonGrid)->Arg(257)->Arg(1025)->Unit(benchmark::kMillisecond);
