#include <benchmark/benchmark.h>

#include <optional>
#include <vector>

#include "slword/rng.hpp"
#include "slword/synthesizer.hpp"

namespace {

using namespace slword;

GeneratingSet standard_set(std::int64_t p, int m, int n) {
  GroupSpec spec = GroupSpec::make(p, m, n);
  ZpRing ring = spec.ring();
  std::vector<ModMatrix> gens;
  ModMatrix a(ring, m);
  ModMatrix b(ring, m);
  for (int i = 0; i < m; ++i) {
    a.set(i, i, 1);
    b.set(i, (i + 1) % m, i + 1 == m && m % 2 == 0 ? ring.reduce(-1) : 1);
  }
  a.set(0, 1, 1);
  return GeneratingSet(spec, {a, b});
}

void BM_base_table_build(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  GeneratingSet S = standard_set(3, 2, n);
  SynthConfig cfg;
  for (auto _ : state) {
    BaseTable t = BaseTable::build(S, cfg);
    benchmark::DoNotOptimize(t.entries());
  }
}
BENCHMARK(BM_base_table_build)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_synthesize(benchmark::State& state) {
  std::int64_t p = state.range(0);
  int m = static_cast<int>(state.range(1));
  int n = static_cast<int>(state.range(2));
  GeneratingSet S = standard_set(p, m, n);
  Synthesizer synth(S);
  Rng rng(1234);
  std::optional<ModMatrix> target;
  for (auto _ : state) {
    state.PauseTiming();
    target = rng.sl_element(S.spec());
    state.ResumeTiming();
    Word w = synth.synthesize(*target);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_synthesize)
    ->Args({3, 2, 4})
    ->Args({3, 2, 8})
    ->Args({3, 2, 12})
    ->Args({3, 3, 4})
    ->Unit(benchmark::kMillisecond);

void BM_evaluate_word(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  GeneratingSet S = standard_set(3, 2, n);
  Synthesizer synth(S);
  Rng rng(99);
  Word w = synth.synthesize(rng.sl_element(S.spec()));
  for (auto _ : state) {
    ModMatrix g = evaluate(w, S, n);
    benchmark::DoNotOptimize(g);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(w.size()));
}
BENCHMARK(BM_evaluate_word)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
