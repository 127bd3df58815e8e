#include <benchmark/benchmark.h>

#include <random>

#include "trd/criticality.hpp"
#include "trd/enumerate.hpp"
#include "trd/families.hpp"
#include "trd/solver.hpp"

namespace {

trd::Graph random_no_isolated(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    trd::Graph g = trd::random_gnp(n, p, rng);
    if (!g.has_isolated_vertex()) return g;
  }
}

void BM_GammaTR_Random(benchmark::State& state) {
  const trd::Graph g = random_no_isolated(static_cast<int>(state.range(0)), 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(trd::gamma_tR_value(g));
}
BENCHMARK(BM_GammaTR_Random)->DenseRange(8, 20, 4);

void BM_GammaTR_Cycle(benchmark::State& state) {
  const trd::Graph g = trd::generate(trd::family::Cycle{static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(trd::gamma_tR_value(g));
}
BENCHMARK(BM_GammaTR_Cycle)->DenseRange(8, 20, 4);

void BM_GammaR_Random(benchmark::State& state) {
  const trd::Graph g = random_no_isolated(static_cast<int>(state.range(0)), 0.3, 11);
  for (auto _ : state) benchmark::DoNotOptimize(trd::gamma_R_value(g));
}
BENCHMARK(BM_GammaR_Random)->DenseRange(8, 20, 4);

void BM_BruteOracle(benchmark::State& state) {
  const trd::Graph g = random_no_isolated(static_cast<int>(state.range(0)), 0.4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(trd::brute_oracle_gamma_tR(g));
}
BENCHMARK(BM_BruteOracle)->DenseRange(6, 10, 2);

void BM_EdgeProfile(benchmark::State& state) {
  const trd::Graph g = random_no_isolated(static_cast<int>(state.range(0)), 0.3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(trd::edge_profile(g).classification);
}
BENCHMARK(BM_EdgeProfile)->Arg(8)->Arg(12);

void BM_DeadVertices(benchmark::State& state) {
  const trd::Graph g = trd::generate(trd::family::DeadExample{static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(trd::dead_vertices(g, trd::DominationMode::total_roman));
}
BENCHMARK(BM_DeadVertices)->DenseRange(2, 5);

void BM_EnumerateLabeled(benchmark::State& state) {
  const trd::universe::AllLabeled u{static_cast<int>(state.range(0)), true, true};
  for (auto _ : state) benchmark::DoNotOptimize(trd::enumerate_graphs(u).size());
}
BENCHMARK(BM_EnumerateLabeled)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
