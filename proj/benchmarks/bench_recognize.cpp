// Microbenchmarks for the recognition pipeline on generated circle graphs.
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "circlegraph/graph.hpp"
#include "circlegraph/lbfs.hpp"
#include "circlegraph/oracle.hpp"
#include "circlegraph/recognizer.hpp"

namespace {

cg::Graph sparse_circle_graph(int n, int window, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return cg::diagram_graph(cg::windowed_random_diagram(n, window, rng));
}

// Diagram whose interlacement is the n-cycle: chord i runs from position 2i
// to position 2i+3 (mod 2n), so it crosses exactly chords i-1 and i+1.
cg::Graph cycle_graph(int n) {
  std::vector<int> owner(2 * static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    owner[static_cast<std::size_t>(2 * i)] = i;
    owner[static_cast<std::size_t>((2 * i + 3) % (2 * n))] = i;
  }
  cg::ChordWord w;
  std::vector<bool> open(static_cast<std::size_t>(n), false);
  for (const int chord : owner) {
    w.push_back({chord, open[static_cast<std::size_t>(chord)] ? 2 : 1});
    open[static_cast<std::size_t>(chord)] = true;
  }
  return cg::diagram_graph(w);
}

void BM_Recognize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cg::Graph g = sparse_circle_graph(n, 8, 1);
  for (auto _ : state) {
    cg::RecognizeResult r = cg::recognize(g);
    benchmark::DoNotOptimize(r.is_circle);
  }
  state.SetComplexityN(n + static_cast<std::int64_t>(g.edge_count()));
}

void BM_RecognizeDense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  const cg::Graph g = cg::diagram_graph(cg::random_diagram(n, rng));
  for (auto _ : state) {
    cg::RecognizeResult r = cg::recognize(g);
    benchmark::DoNotOptimize(r.is_circle);
  }
  state.SetComplexityN(n + static_cast<std::int64_t>(g.edge_count()));
}

void BM_Lbfs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cg::Graph g = cycle_graph(n);
  for (auto _ : state) {
    cg::LbfsOrdering ord = cg::lbfs(g, 0);
    benchmark::DoNotOptimize(ord.order.data());
  }
}

void BM_Certify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  const cg::ChordWord w = cg::windowed_random_diagram(n, 8, rng);
  const cg::Graph g = cg::diagram_graph(w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cg::certify(g, w));
  }
}

}  // namespace

BENCHMARK(BM_Recognize)->RangeMultiplier(2)->Range(1 << 10, 1 << 16)->Complexity();
BENCHMARK(BM_RecognizeDense)->RangeMultiplier(2)->Range(1 << 7, 1 << 10)->Complexity();
BENCHMARK(BM_Lbfs)->RangeMultiplier(2)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_Certify)->RangeMultiplier(2)->Range(1 << 10, 1 << 16);

BENCHMARK_MAIN();
