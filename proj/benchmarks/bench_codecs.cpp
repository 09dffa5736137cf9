#include <benchmark/benchmark.h>

#include "herencode/corpus.hpp"
#include "herencode/labeling.hpp"
#include "herencode/modular.hpp"
#include "herencode/succinct.hpp"

using namespace herencode;

namespace {

std::vector<Graph> corpus(std::size_t n_max) { return random_graphs(42, 64, n_max); }

void BM_ModularEncode(benchmark::State& state) {
  const auto graphs = corpus(static_cast<std::size_t>(state.range(0)));
  NaivePrimeCodec pc;
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(encode_modular(graphs[i++ % graphs.size()], pc));
}
BENCHMARK(BM_ModularEncode)->Arg(16)->Arg(32)->Arg(64);

void BM_ModularRoundTrip(benchmark::State& state) {
  const auto graphs = corpus(static_cast<std::size_t>(state.range(0)));
  NaivePrimeCodec pc;
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decode_modular(encode_modular(graphs[i++ % graphs.size()], pc), pc));
}
BENCHMARK(BM_ModularRoundTrip)->Arg(16)->Arg(64);

void BM_Decompose(benchmark::State& state) {
  const auto graphs = corpus(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decompose(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_Decompose)->Arg(16)->Arg(64);

void BM_FunctionalEncodeComplete(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Graph g(n);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
  for (auto _ : state) benchmark::DoNotOptimize(encode_functional(g, 0));
}
BENCHMARK(BM_FunctionalEncodeComplete)->Arg(16)->Arg(64);

void BM_DegeneracyLabels(benchmark::State& state) {
  const auto graphs = corpus(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const Graph& g = graphs[i++ % graphs.size()];
    benchmark::DoNotOptimize(label_by_degeneracy(g, least_degeneracy(g)));
  }
}
BENCHMARK(BM_DegeneracyLabels)->Arg(16)->Arg(64);

void BM_ForestCover(benchmark::State& state) {
  const auto graphs = corpus(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(forest_cover(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_ForestCover)->Arg(16)->Arg(64);

}  // namespace
