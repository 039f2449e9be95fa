#include <benchmark/benchmark.h>

#include <vector>

#include "quartic/analysis.hpp"
#include "quartic/elliptic.hpp"
#include "quartic/quantum.hpp"
#include "quartic/simulator.hpp"
#include "quartic/solutions.hpp"

using namespace quartic;

static void BM_Jacobi(benchmark::State& state) {
  const elliptic::EllipticParameter m(state.range(0) == 0 ? 0.5 : -1.0);
  double u = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(elliptic::jacobi(u, m));
    u += 1e-3;
  }
}
BENCHMARK(BM_Jacobi)->Arg(0)->Arg(1);

static void BM_ResidualMax(benchmark::State& state) {
  const auto s = make_massive(1.0, 2.0, 1.0, 0.3, Sign::Plus, std::vector{0.4, 0.0, 0.0});
  for (auto _ : state) benchmark::DoNotOptimize(analysis::residual_max(s, 256));
}
BENCHMARK(BM_ResidualMax);

static void BM_FourierSeries(benchmark::State& state) {
  const auto s = make_massless(2.0, 1.0, 0.0, Sign::Plus, std::vector{0.0});
  for (auto _ : state) benchmark::DoNotOptimize(analysis::fourier_series(s, 8));
}
BENCHMARK(BM_FourierSeries)->Unit(benchmark::kMillisecond);

static void BM_GreenSpectrum(benchmark::State& state) {
  const auto g = quantum::GreenTimePart::make(0, 1.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(quantum::green_spectrum(g, 4));
}
BENCHMARK(BM_GreenSpectrum)->Unit(benchmark::kMillisecond);

static void BM_LeapfrogStep(benchmark::State& state) {
  const auto s = make_massless(2.0, 1.0, 0.0, Sign::Plus, std::vector{0.5});
  const auto g = sim::GridSpec::from_cfl(static_cast<int>(state.range(0)), sim::spatial_period(s), 0.5);
  auto st = sim::seed_from_spec(s, g);
  const auto p = sim::field_params(s);
  for (auto _ : state) sim::step_in_place(st, g, p);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LeapfrogStep)->Arg(1024)->Arg(4096);

static void BM_TenPeriodRun(benchmark::State& state) {
  const auto s = make_massless(2.0, 1.0, 0.0, Sign::Plus, std::vector{0.5});
  const auto g = sim::GridSpec::from_cfl(1024, sim::spatial_period(s), 0.5);
  const auto steps = static_cast<std::int64_t>(10 * s.phase_period() / s.momentum.energy / g.dt);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sim::run(sim::seed_from_spec(s, g), g, sim::field_params(s), steps, 64));
  }
}
BENCHMARK(BM_TenPeriodRun)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
