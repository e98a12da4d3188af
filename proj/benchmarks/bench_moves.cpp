#include <benchmark/benchmark.h>

#include <random>

#include "knotlab/corpus.hpp"
#include "knotlab/finite_type.hpp"
#include "knotlab/moves.hpp"
#include "knotlab/search.hpp"

using namespace knotlab;

namespace {

void BM_ApplyChord(benchmark::State& state) {
  const Diagram& d = corpus_entry("7_4").diagram;
  const auto chords = enumerate_sites(d, static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(apply_chord(d, chords[i++ % chords.size()]));
}
BENCHMARK(BM_ApplyChord)->Arg(2)->Arg(3)->Arg(4);

void BM_EnumerateSites(benchmark::State& state) {
  const Diagram& d = corpus_entry("7_4").diagram;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sites(d, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateSites)->Arg(2)->Arg(3)->Arg(4);

void BM_FamilyAlternatingSum(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto fam = random_family(corpus_entry("5_2").diagram, {2, 2, 2, 2}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(alternating_sum(*fam, Invariant::V3));
}
BENCHMARK(BM_FamilyAlternatingSum);

void BM_DeltaUnknot(benchmark::State& state) {
  const auto& entry = builtin_corpus().at(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(delta_unknot(entry.diagram));
  state.SetLabel(entry.name);
}
BENCHMARK(BM_DeltaUnknot)->DenseRange(1, 8, 1)->Unit(benchmark::kMillisecond);

void BM_BfsTrefoilToUnknot(benchmark::State& state) {
  const Diagram& t = corpus_entry("3_1").diagram;
  for (auto _ : state) benchmark::DoNotOptimize(bfs_path(t, Diagram{}, {2}));
}
BENCHMARK(BM_BfsTrefoilToUnknot);

}  // namespace
