#include <benchmark/benchmark.h>

#include "raag/extension.hpp"
#include "raag/lengths.hpp"
#include "raag/random.hpp"

using namespace raag;

namespace {

const SimplicialGraph kC5 = SimplicialGraph::cycle(5);

void snapshot_with(benchmark::State& state, EdgeKernel kernel) {
  const Budget budget{static_cast<int>(state.range(0)), 1};
  for (auto _ : state) {
    auto s = ExtSnapshot::build(kC5, budget, {.edges = kernel});
    benchmark::DoNotOptimize(s.edge_count());
  }
}

void BM_SnapshotPairwise(benchmark::State& state) { snapshot_with(state, EdgeKernel::pairwise); }
void BM_SnapshotNeighbours(benchmark::State& state) { snapshot_with(state, EdgeKernel::neighbours); }

void BM_SnapshotGirth(benchmark::State& state) {
  auto s = ExtSnapshot::build(kC5, {static_cast<int>(state.range(0)), 1});
  for (auto _ : state) benchmark::DoNotOptimize(girth(s.adjacency()));
}

void BM_StarLength(benchmark::State& state) {
  Rng rng(1);
  std::vector<GroupElement> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_element(rng, kC5, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    // A fresh power each time defeats the length cache.
    benchmark::DoNotOptimize(star_length(words[i % words.size()].pow(static_cast<int>(1 + i / words.size()))));
    ++i;
  }
}

}  // namespace

BENCHMARK(BM_SnapshotPairwise)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SnapshotNeighbours)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SnapshotGirth)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StarLength)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
