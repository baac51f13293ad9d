#include <benchmark/benchmark.h>

#include "omegastar/hitting.hpp"
#include "omegastar/realize.hpp"

using namespace omegastar;

namespace {

HitDigraph cycle_with_chords(std::size_t n) {
  HitDigraph g = HitDigraph::cycle(n);
  for (std::size_t v = 0; v < n; v += 3) g.add_edge(v, (v * 7 + 2) % n);
  return g;
}

void BM_HitDigraph(benchmark::State& state) {
  const auto k = static_cast<Int>(state.range(0));
  const auto v = ClopenPartition::residues(k);
  const auto h = realize_digraph(v, cycle_with_chords(static_cast<std::size_t>(k))).h;
  for (auto _ : state) benchmark::DoNotOptimize(hit_digraph(h, v));
}
BENCHMARK(BM_HitDigraph)->Arg(2)->Arg(6)->Arg(12)->Arg(24);

void BM_RealizeDigraph(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto v = ClopenPartition::residues(static_cast<Int>(k));
  const auto g = cycle_with_chords(k);
  for (auto _ : state) benchmark::DoNotOptimize(realize_digraph(v, g));
}
BENCHMARK(BM_RealizeDigraph)->Arg(2)->Arg(6)->Arg(12)->Arg(24);

void BM_Compose(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto v = ClopenPartition::residues(static_cast<Int>(k));
  const auto r = realize_digraph(v, cycle_with_chords(k));
  for (auto _ : state) benchmark::DoNotOptimize(compose(r.h, invert(r.f)));
}
BENCHMARK(BM_Compose)->Arg(2)->Arg(6)->Arg(12);

void BM_RealizeChain(benchmark::State& state) {
  const auto m2 = ClopenPartition::residues(2), m4 = ClopenPartition::residues(4), m12 = ClopenPartition::residues(12);
  const auto g12 = cycle_with_chords(12);
  const auto g4 = project_digraph(g12, m12, m4);
  const RefinementChain chain{{m2, project_digraph(g4, m4, m2)}, {m4, g4}, {m12, g12}};
  for (auto _ : state) benchmark::DoNotOptimize(realize_chain(chain));
}
BENCHMARK(BM_RealizeChain);

}  // namespace

BENCHMARK_MAIN();
