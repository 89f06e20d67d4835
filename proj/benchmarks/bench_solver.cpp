#include <benchmark/benchmark.h>

#include "metdim/constructions.hpp"
#include "metdim/resolver.hpp"

using namespace metdim;

static void BM_AllPairsDistances(benchmark::State& state) {
  const Graph g = subdivide(complete(static_cast<std::size_t>(state.range(0)))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
  state.SetLabel(std::to_string(g.order()) + " vertices");
}
BENCHMARK(BM_AllPairsDistances)->Arg(8)->Arg(16)->Arg(32);

static void BM_IsGenerator(benchmark::State& state) {
  const auto s = subdivide(complete(static_cast<std::size_t>(state.range(0))));
  const auto d = all_pairs_distances(s.graph);
  const auto set = greedy_generator(s.graph, d, Kind::EdgeMetric);
  for (auto _ : state) benchmark::DoNotOptimize(is_generator(s.graph, d, set, Kind::EdgeMetric));
}
BENCHMARK(BM_IsGenerator)->Arg(8)->Arg(16)->Arg(32);

static void BM_ExactDimension(benchmark::State& state) {
  const Graph g = subdivide(complete(static_cast<std::size_t>(state.range(0)))).graph;
  const Kind kind = state.range(1) ? Kind::EdgeMetric : Kind::VertexMetric;
  for (auto _ : state) benchmark::DoNotOptimize(exact_dimension(g, kind));
}
BENCHMARK(BM_ExactDimension)
    ->Args({6, 0})
    ->Args({6, 1})
    ->Args({8, 0})
    ->Args({8, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_Refutation(benchmark::State& state) {
  const Graph g = subdivide(complete(7)).graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_no_generator_of_size(g, Kind::VertexMetric, 4));
  }
}
BENCHMARK(BM_Refutation)->Unit(benchmark::kMillisecond);

static void BM_ChainWithPieces(benchmark::State& state) {
  const auto layout = chain(4, 6);
  for (auto _ : state) {
    SolveOptions options;
    options.pieces = chain_pieces(layout, Kind::VertexMetric);
    benchmark::DoNotOptimize(exact_dimension(layout.graph, Kind::VertexMetric, options));
  }
}
BENCHMARK(BM_ChainWithPieces)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
