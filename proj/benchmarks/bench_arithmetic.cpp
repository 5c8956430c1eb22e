#include <benchmark/benchmark.h>

#include "slword/matrices.hpp"
#include "slword/packed.hpp"
#include "slword/rng.hpp"

namespace {

using namespace slword;

void BM_matrix_mul_exact(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  int w = static_cast<int>(state.range(1));
  ZpRing ring = ZpRing::make(3, w);
  Rng rng(42);
  ModMatrix a = rng.matrix(ring, m);
  ModMatrix b = rng.matrix(ring, m);
  for (auto _ : state) {
    ModMatrix c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_matrix_mul_exact)
    ->Args({2, 4})
    ->Args({2, 16})
    ->Args({3, 4})
    ->Args({5, 8});

void BM_matrix_mul_packed(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  int w = static_cast<int>(state.range(1));
  packed::Engine eng = packed::Engine::make(3, w, m);
  ZpRing ring = ZpRing::make(3, w);
  Rng rng(42);
  auto a = eng.from_mod(rng.matrix(ring, m));
  auto b = eng.from_mod(rng.matrix(ring, m));
  for (auto _ : state) {
    auto c = eng.mul(a, b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_matrix_mul_packed)->Args({2, 4})->Args({2, 16})->Args({3, 4});

void BM_matrix_inverse(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  GroupSpec spec = GroupSpec::make(3, m, 8);
  Rng rng(7);
  ModMatrix g = rng.sl_element(spec);
  for (auto _ : state) {
    ModMatrix inv = g.inverse();
    benchmark::DoNotOptimize(inv);
  }
}
BENCHMARK(BM_matrix_inverse)->Arg(2)->Arg(3)->Arg(5);

void BM_residue_invert(benchmark::State& state) {
  int w = static_cast<int>(state.range(0));
  ZpRing ring = ZpRing::make(3, w);
  Rng rng(11);
  Int u = rng.unit(ring);
  for (auto _ : state) {
    Int v = ring.invert(u);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_residue_invert)->Arg(4)->Arg(16)->Arg(64);

}  // namespace
