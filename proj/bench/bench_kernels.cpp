// Serial vs parallel exhaustive kernels.
#include <benchmark/benchmark.h>

#include "dpc/configgen.hpp"
#include "dpc/recognizer.hpp"
#include "dpc/solver.hpp"

namespace {

constexpr std::uint64_t kBudget = 1'000'000'000;

dpc::Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? dpc::Execution::serial : dpc::Execution::parallel;
}

// K-configurations are uncolorable, so the whole product space is searched.
void BM_BruteForceK(benchmark::State& state) {
  const auto cfg = dpc::k_configuration(static_cast<int>(state.range(1)), static_cast<int>(state.range(2)));
  for (auto _ : state) {
    auto r = dpc::brute_force_transversal(cfg.cover, kBudget, mode(state));
    benchmark::DoNotOptimize(r);
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_BruteForceK)
    ->ArgNames({"par", "n", "t"})
    ->Args({0, 7, 1})->Args({1, 7, 1})
    ->Args({0, 5, 2})->Args({1, 5, 2})
    ->Args({0, 8, 1})->Args({1, 8, 1})
    ->Unit(benchmark::kMillisecond);

dpc::Hypergraph cycle(int n) {
  std::vector<dpc::VertexId> vs;
  std::vector<dpc::Edge> es;
  for (int i = 0; i < n; ++i) {
    vs.push_back(i);
    es.push_back({i, {i, (i + 1) % n}});
  }
  return {vs, es};
}

dpc::Hypergraph complete(int n) {
  std::vector<dpc::VertexId> vs;
  std::vector<dpc::Edge> es;
  for (int i = 0; i < n; ++i) vs.push_back(i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({static_cast<dpc::EdgeId>(es.size()), {i, j}});
  return {vs, es};
}

void run_chromatic(benchmark::State& state, const dpc::Hypergraph& g) {
  for (auto _ : state) {
    auto r = dpc::dp_chromatic_exact(g, 5, kBudget, mode(state));
    benchmark::DoNotOptimize(r);
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_ChromaticCycle(benchmark::State& state) { run_chromatic(state, cycle(static_cast<int>(state.range(1)))); }
BENCHMARK(BM_ChromaticCycle)->ArgNames({"par", "n"})->Args({0, 5})->Args({1, 5})->Args({0, 6})->Args({1, 6})
    ->Unit(benchmark::kMillisecond);

void BM_ChromaticComplete(benchmark::State& state) { run_chromatic(state, complete(4)); }
BENCHMARK(BM_ChromaticComplete)->ArgNames({"par"})->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
