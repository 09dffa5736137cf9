#include <benchmark/benchmark.h>

#include "herencode/corpus.hpp"
#include "herencode/speed.hpp"
#include "herencode/witness.hpp"

using namespace herencode;

namespace {

void BM_EnumerateBipartite(benchmark::State& state) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_bipartite(k, k, [](const BipartiteGraph&) { return true; }, [&](const BipartiteGraph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateBipartite)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CertifyChain(benchmark::State& state) {
  std::vector<BipartiteGraph> members;
  const ClassSpec spec = class_spec_for("chain", {});
  for_each_bipartite(4, 4, [&](const BipartiteGraph& g) { return in_class(g, spec); },
                     [&](const BipartiteGraph& g) { members.push_back(g); });
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(find_certificate(members[i++ % members.size()], "chain", {}));
}
BENCHMARK(BM_CertifyChain);

void BM_CertifyP7K12(benchmark::State& state) {
  std::vector<BipartiteGraph> members;
  const ClassSpec spec = class_spec_for("P7-K12-2K2", {});
  for_each_bipartite(4, 4, [&](const BipartiteGraph& g) { return in_class(g, spec); },
                     [&](const BipartiteGraph& g) { members.push_back(g); });
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(find_certificate(members[i++ % members.size()], "P7-K12-2K2", {}));
}
BENCHMARK(BM_CertifyP7K12);

void BM_CountLabelled(benchmark::State& state) {
  ClassSpec p3;
  p3.forbidden = {pattern::path(3)};
  for (auto _ : state) benchmark::DoNotOptimize(count_labelled(p3, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CountLabelled)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
