#include <benchmark/benchmark.h>

#include "slword/lie.hpp"
#include "slword/logexp.hpp"
#include "slword/rng.hpp"

namespace {

using namespace slword;

void BM_solve_bracket_sl2(benchmark::State& state) {
  int w = static_cast<int>(state.range(0));
  ZpRing ring = ZpRing::make(3, w);
  Rng rng(3);
  LieElement a = LieElement::from(rng.traceless(ring, 2));
  for (auto _ : state) {
    auto pair = solve_bracket_sl2(a);
    benchmark::DoNotOptimize(pair);
  }
}
BENCHMARK(BM_solve_bracket_sl2)->Arg(1)->Arg(4)->Arg(8);

void BM_solve_two_brackets(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  ZpRing ring = ZpRing::make(7, 4);
  Rng rng(5);
  LieElement a = LieElement::from(rng.traceless(ring, m));
  for (auto _ : state) {
    TwoBrackets tb = solve_two_brackets(a);
    benchmark::DoNotOptimize(tb);
  }
}
BENCHMARK(BM_solve_two_brackets)->Arg(3)->Arg(5)->Arg(7);

void BM_trunc_log(benchmark::State& state) {
  int K = static_cast<int>(state.range(0));
  ZpRing ring = ZpRing::make(3, K);
  Rng rng(9);
  ModMatrix g = rng.congruent_identity(ring, 2, 1);
  for (auto _ : state) {
    LieElement a = trunc_log(g, K);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_trunc_log)->Arg(4)->Arg(8)->Arg(16);

void BM_trunc_exp(benchmark::State& state) {
  int K = static_cast<int>(state.range(0));
  ZpRing ring = ZpRing::make(3, K);
  Rng rng(9);
  ModMatrix g = rng.congruent_identity(ring, 2, 1);
  LieElement a = trunc_log(g, K);
  for (auto _ : state) {
    ModMatrix h = trunc_exp(a, K);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_trunc_exp)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
