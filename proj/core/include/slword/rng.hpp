#ifndef SLWORD_RNG_HPP
#define SLWORD_RNG_HPP

#include <cstdint>
#include <random>

#include "slword/matrices.hpp"

namespace slword {

// splitmix64 finisher; used to derive independent streams from (seed, tags)
// so that per-cell seeds in benchmarks are reproducible in isolation.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t t0,
                       std::uint64_t t1 = 0, std::uint64_t t2 = 0);

/**
 * Deterministic sampler over ring and group elements.  mt19937_64 is fully
 * specified by the standard, and all derived draws go through rejection
 * sampling on raw 64-bit outputs, so every sequence is reproducible across
 * platforms from the seed alone.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)

  // Uniform residue, drawn digit by digit so arbitrary p^w works.
  Int residue(const ZpRing& ring);
  Int unit(const ZpRing& ring);

  ModMatrix matrix(const ZpRing& ring, int m);
  // Uniform over sl_m: free entries except the last diagonal slot.
  ModMatrix traceless(const ZpRing& ring, int m);

  // Uniform over SL_m(Z/p^n): sample until det is a unit, then scale the
  // first row by det^-1.  The scaling map has fibers of equal size, so the
  // result is uniform over the determinant-one stratum.
  ModMatrix sl_element(const GroupSpec& spec);

  // Uniform over {g in SL : g == I mod p^c}, c >= 1, at the ring's exponent.
  ModMatrix congruent_identity(const ZpRing& ring, int m, int c);

 private:
  std::mt19937_64 gen_;
};

}  // namespace slword

#endif
