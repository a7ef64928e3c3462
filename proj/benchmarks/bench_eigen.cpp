#include <benchmark/benchmark.h>

#include "rotor_otto/qelectric.hpp"

namespace ro = rotor_otto;

static void BM_PendulumSpectrum(benchmark::State& state) {
  const auto h = ro::build_pendulum_hamiltonian(ro::ControlParam(10.0),
                                                static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ro::eigensolve_sym_tridiagonal(h, false));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PendulumSpectrum)->RangeMultiplier(4)->Range(32, 8192)->Complexity();

// Levels plus <S> for the states inside the thermal window at tau = 1.
static void BM_PendulumLevelsWindowed(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ro::pendulum_levels(ro::ControlParam(10.0), cutoff, 50.0));
  }
}
BENCHMARK(BM_PendulumLevelsWindowed)->RangeMultiplier(4)->Range(32, 8192);

static void BM_QuartetElectric(benchmark::State& state) {
  const auto p = ro::make_cycle_point(3.0, 1.0, state.range(0), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(ro::thermal_quartet_electric(p));
}
BENCHMARK(BM_QuartetElectric)->Arg(1)->Arg(10)->Arg(100);
