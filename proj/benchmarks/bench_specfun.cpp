#include <benchmark/benchmark.h>

#include "rotor_otto/qmagnetic.hpp"
#include "rotor_otto/specfun.hpp"

namespace ro = rotor_otto;

static void BM_BesselRatio(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ro::bessel_ratio_i1_i0(x));
}
BENCHMARK(BM_BesselRatio)->Arg(1)->Arg(20)->Arg(500);

static void BM_LogBesselI0(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ro::log_bessel_i0(x));
}
BENCHMARK(BM_LogBesselI0)->Arg(1)->Arg(20)->Arg(500);

static void BM_MagneticLogZ(benchmark::State& state) {
  const ro::ControlParam l(0.3);
  const ro::ReducedTemperature t(state.range(0) / 100.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ro::quantum_partition_magnetic_direct(l, t));
    benchmark::DoNotOptimize(ro::quantum_partition_magnetic_theta(l, t));
  }
}
BENCHMARK(BM_MagneticLogZ)->Arg(1)->Arg(100)->Arg(1000);
