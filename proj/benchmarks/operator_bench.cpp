#include <benchmark/benchmark.h>

#include "circlespec/analysis.hpp"
#include "circlespec/asymptotics.hpp"
#include "circlespec/simulate.hpp"
#include "circlespec/spectrum.hpp"

using namespace circlespec;

static void BM_WrappedKernel(benchmark::State& state) {
  auto map = CircleMapSpec::sine_circle(2.2);
  auto noise = NoiseSpec::constant();
  double y = -3.0;
  for (auto _ : state) {
    y += 1e-4;
    benchmark::DoNotOptimize(wrapped_kernel(map, noise, 0.05, 0.3, y));
  }
}
BENCHMARK(BM_WrappedKernel);

static void BM_Assemble(benchmark::State& state) {
  auto map = CircleMapSpec::sine_circle(2.2);
  auto noise = NoiseSpec::constant();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto op = assemble(map, noise, 0.1, n);
    benchmark::DoNotOptimize(op.matrix.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Assemble)->Arg(128)->Arg(256)->Arg(512)->Complexity(benchmark::oNSquared);

static void BM_Spectrum(benchmark::State& state) {
  auto map = CircleMapSpec::sine_circle(2.2);
  auto noise = NoiseSpec::constant();
  const int n = static_cast<int>(state.range(0));
  auto op = assemble(map, noise, 0.1, n);
  for (auto _ : state) {
    auto spec = spectrum(op, 6);
    benchmark::DoNotOptimize(spec.eigenvalues.data());
  }
}
BENCHMARK(BM_Spectrum)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_FindOrbits(benchmark::State& state) {
  auto map = CircleMapSpec::sine_circle(2.3);
  for (auto _ : state) {
    auto orbits = find_periodic_orbits(map, static_cast<int>(state.range(0)), 2048);
    benchmark::DoNotOptimize(orbits.data());
  }
}
BENCHMARK(BM_FindOrbits)->Arg(2)->Arg(4);

static void BM_SimulateChain(benchmark::State& state) {
  auto map = CircleMapSpec::sine_circle(2.2);
  auto noise = NoiseSpec::constant();
  for (auto _ : state) {
    auto stats = simulate_chain(map, noise, 0.1, 0.0, 100000, 1000, 256, 7);
    benchmark::DoNotOptimize(stats.counts.data());
  }
}
BENCHMARK(BM_SimulateChain)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
