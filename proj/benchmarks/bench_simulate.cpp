#include <benchmark/benchmark.h>

#include "sidewinder/locomotion.hpp"

using namespace sidewinder;

static void BM_SimulateCycle(benchmark::State& state) {
  const ModelConfig cfg;
  const GaitParams g;
  const SignalMode mode = state.range(0) == 0 ? SignalMode::kIdeal : SignalMode::kSquare;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(cfg, g, 1, mode));
  }
  state.SetItemsProcessed(state.iterations() * 500);  // steps per cycle
}
BENCHMARK(BM_SimulateCycle)->Arg(0)->Arg(1);
