#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "epifair/audit.hpp"
#include "epifair/dynamics.hpp"
#include "epifair/indices.hpp"
#include "epifair/network.hpp"

using namespace epifair;

namespace {

Distribution random_distribution(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  Distribution d;
  d.values.resize(n);
  for (auto& v : d.values) v = u(rng);
  d.groups.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.groups[i] = i % 2 ? "B" : "A";
  return d;
}

void bm_gini(benchmark::State& state) {
  const auto d = random_distribution(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gini(d));
}
BENCHMARK(bm_gini)->Arg(100)->Arg(1000)->Arg(10000);

void bm_compute_panel(benchmark::State& state) {
  const auto d = random_distribution(static_cast<std::size_t>(state.range(0)));
  const std::vector<double> alphas = {2.0};
  const std::vector<double> epsilons = {2.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(compute_panel(d, alphas, epsilons, 10));
}
BENCHMARK(bm_compute_panel)->Arg(100)->Arg(1000);

void bm_fj_step(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  const auto group = split_half(n);
  const auto adj = generate_sbm(group, 0.18, 0.04, rng);
  const auto w = init_influence(adj, 0.5, 1.5, rng);
  const auto x0 = sample_initial_opinions(group, 1.4, 5.0, rng);
  const auto lambda = sample_stubbornness(n, 0.2, 0.5, rng);
  auto x = x0;
  for (auto _ : state) {
    x = fj_step(x, x0, lambda, w);
    benchmark::DoNotOptimize(x.x.data());
  }
}
BENCHMARK(bm_fj_step)->Arg(100)->Arg(400);

void bm_run_scenario(benchmark::State& state) {
  ScenarioConfig cfg;
  cfg.scenario = ScenarioSelection::targeted_boost;
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario(cfg, 1));
}
BENCHMARK(bm_run_scenario)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
