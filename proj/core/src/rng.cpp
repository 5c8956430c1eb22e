#include "slword/rng.hpp"

namespace slword {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t t0, std::uint64_t t1,
                       std::uint64_t t2) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ t0);
  h = mix64(h ^ t1);
  h = mix64(h ^ t2);
  return h;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error("Rng::below: zero bound");
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = gen_();
  } while (r >= limit);
  return r % bound;
}

Int Rng::residue(const ZpRing& ring) {
  Int acc = 0;
  auto p = static_cast<std::uint64_t>(ring.p());
  for (int i = 0; i < ring.w(); ++i) {
    acc = acc * ring.p() + static_cast<std::int64_t>(below(p));
  }
  return acc;
}

Int Rng::unit(const ZpRing& ring) {
  for (;;) {
    Int x = residue(ring);
    if (ring.is_unit(x)) return x;
  }
}

ModMatrix Rng::matrix(const ZpRing& ring, int m) {
  ModMatrix r(ring, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) r.set(i, j, residue(ring));
  return r;
}

ModMatrix Rng::traceless(const ZpRing& ring, int m) {
  ModMatrix r(ring, m);
  Int sum = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == m - 1 && j == m - 1) continue;
      Int x = residue(ring);
      if (i == j) sum += x;
      r.set(i, j, x);
    }
  }
  r.set(m - 1, m - 1, -sum);
  return r;
}

ModMatrix Rng::sl_element(const GroupSpec& spec) {
  ZpRing ring = spec.ring();
  for (int tries = 0; tries < 4096; ++tries) {
    ModMatrix g = matrix(ring, spec.m);
    Int d = g.det();
    if (!ring.is_unit(d)) continue;
    Int dinv = ring.invert(d);
    for (int j = 0; j < spec.m; ++j) g.set(0, j, g.at(0, j) * dinv);
    return g;
  }
  throw Error("Rng::sl_element: unit determinant never hit");
}

ModMatrix Rng::congruent_identity(const ZpRing& ring, int m, int c) {
  if (c < 1 || c > ring.w()) {
    throw Error("Rng::congruent_identity: level " + std::to_string(c) +
                " out of range");
  }
  ModMatrix g = ModMatrix::identity(ring, m);
  if (c == ring.w()) return g;
  Int pc = ring.p_pow(c);
  ZpRing top = ZpRing::make(ring.p(), ring.w() - c);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      g.set(i, j, g.at(i, j) + pc * residue(top));
    }
  }
  // det == 1 mod p^c, hence a unit; scaling row 0 by its inverse lands in
  // SL while staying congruent to I mod p^c.
  Int dinv = ring.invert(g.det());
  for (int j = 0; j < m; ++j) g.set(0, j, g.at(0, j) * dinv);
  return g;
}

}  // namespace slword
