#include <benchmark/benchmark.h>

#include "rotor_otto/sweep.hpp"

namespace ro = rotor_otto;

static void BM_Sweep(benchmark::State& state) {
  ro::SweepSpec spec;
  spec.model = static_cast<ro::Model>(state.range(0));
  spec.machine = static_cast<ro::Machine>(state.range(1));
  spec.lambda_h.count = 40;
  spec.tau_h.count = 40;
  if (spec.machine == ro::Machine::Magnetic) {
    spec.lambda_h = {0.0, 0.5, 40, ro::AxisScale::Linear};
    spec.tau_h = {0.01, 2.0, 40, ro::AxisScale::Linear};
    spec.lambda_c = 0.485;
    spec.tau_c = 0.001;
  }
  for (auto _ : state) benchmark::DoNotOptimize(ro::run_sweep(spec));
  state.SetItemsProcessed(state.iterations() * 40 * 40);
}
BENCHMARK(BM_Sweep)
    ->ArgNames({"quantum", "magnetic"})
    ->Args({0, 0})
    ->Args({1, 0})
    ->Args({0, 1})
    ->Args({1, 1})
    ->Unit(benchmark::kMillisecond);
