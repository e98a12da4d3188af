#include <benchmark/benchmark.h>

#include "knotlab/corpus.hpp"
#include "knotlab/invariants.hpp"

using namespace knotlab;

namespace {

const Diagram& knot(int index) { return builtin_corpus().at(static_cast<std::size_t>(index)).diagram; }

void crossing_args(benchmark::internal::Benchmark* b) {
  const auto& c = builtin_corpus();
  for (std::size_t i = 1; i < c.size(); i += 4) b->Arg(static_cast<int>(i));
  b->Arg(static_cast<int>(c.size() - 1));
}

void BM_KauffmanBracket(benchmark::State& state) {
  const Diagram& d = knot(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d));
  state.SetLabel(builtin_corpus()[state.range(0)].name);
}
BENCHMARK(BM_KauffmanBracket)->Apply(crossing_args);

void BM_ConwayUncached(benchmark::State& state) {
  const Diagram& d = knot(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ConwayEngine engine;
    benchmark::DoNotOptimize(engine(d));
  }
  state.SetLabel(builtin_corpus()[state.range(0)].name);
}
BENCHMARK(BM_ConwayUncached)->Apply(crossing_args);

void BM_GaussV2(benchmark::State& state) {
  const Diagram& d = knot(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(v2(d));
  state.SetLabel(builtin_corpus()[state.range(0)].name);
}
BENCHMARK(BM_GaussV2)->Apply(crossing_args);

void BM_GaussV3(benchmark::State& state) {
  const Diagram& d = knot(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(v3(d));
  state.SetLabel(builtin_corpus()[state.range(0)].name);
}
BENCHMARK(BM_GaussV3)->Apply(crossing_args);

void BM_CanonicalKey(benchmark::State& state) {
  const Diagram& d = knot(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(d));
  state.SetLabel(builtin_corpus()[state.range(0)].name);
}
BENCHMARK(BM_CanonicalKey)->Apply(crossing_args);

}  // namespace
