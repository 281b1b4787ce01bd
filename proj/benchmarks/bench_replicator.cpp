#include <benchmark/benchmark.h>

#include "mediagov/replicator.hpp"

using namespace mediagov;

namespace {

void BM_Derivatives(benchmark::State& state) {
  const GameParams p;
  PopulationState s;
  s.x = {0.3, 0.2, 0.25, 0.25};
  s.y = 0.4;
  const DynamicsForm form =
      state.range(0) == 0 ? DynamicsForm::PaperExact : DynamicsForm::Textbook;
  for (auto _ : state) {
    benchmark::DoNotOptimize(derivatives(s, p, form));
  }
}
BENCHMARK(BM_Derivatives)->Arg(0)->Arg(1);

void BM_IntegrateHorizon100(benchmark::State& state) {
  const GameParams p;
  IntegratorConfig cfg;
  cfg.horizon = 100.0;
  cfg.record_stride = 100;
  PopulationState s0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(s0, p, cfg));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(cfg.horizon / cfg.step_size));
}
BENCHMARK(BM_IntegrateHorizon100);

void BM_OutcomeFastPath(benchmark::State& state) {
  const GameParams p;
  IntegratorConfig cfg;
  cfg.step_size = 0.02;
  cfg.horizon = 200.0;
  PopulationState s0;
  s0.x = {0.6, 0.2, 0.1, 0.1};
  s0.y = 0.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_outcome(s0, p, cfg));
  }
}
BENCHMARK(BM_OutcomeFastPath);

void BM_BasinCensusCoarse(benchmark::State& state) {
  const GameParams p;
  IntegratorConfig cfg;
  cfg.step_size = 0.05;
  cfg.horizon = 500.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(basin_census(p, 0.25, cfg, 1));
  }
}
BENCHMARK(BM_BasinCensusCoarse)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
