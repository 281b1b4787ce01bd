#include <benchmark/benchmark.h>

#include "mediagov/abm.hpp"

using namespace mediagov;

namespace {

void BM_Fermi(benchmark::State& state) {
  double a = 0.3, b = 0.7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fermi_probability(a, b, 1.0));
    std::swap(a, b);
  }
}
BENCHMARK(BM_Fermi);

void BM_AccumulatePayoff(benchmark::State& state) {
  const GameParams p;
  const PayoffTable table = make_payoff_table(p);
  Rng rng(1);
  std::vector<CreatorStrategy> creators(50);
  for (auto& c : creators) c = static_cast<CreatorStrategy>(rng.uniform_below(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(accumulate_payoff(UserStrategy::GMedia, creators, table, rng));
  }
}
BENCHMARK(BM_AccumulatePayoff);

void BM_Generation(benchmark::State& state) {
  const GameParams p;
  AbmConfig cfg;
  const PayoffTable table = make_payoff_table(p);
  Rng rng(2);
  AgentPopulations pop = random_populations(cfg.n_users, cfg.n_creators, rng);
  for (auto _ : state) {
    for (int s = 0; s < cfg.n_users + cfg.n_creators; ++s) {
      evolutionary_step(pop, table, cfg, rng);
    }
  }
  state.SetItemsProcessed(state.iterations() * (cfg.n_users + cfg.n_creators));
}
BENCHMARK(BM_Generation);

void BM_RunAbm(benchmark::State& state) {
  const GameParams p;
  AbmConfig cfg;
  cfg.generations = static_cast<int>(state.range(0));
  cfg.seed = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_abm(p, cfg));
  }
}
BENCHMARK(BM_RunAbm)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
