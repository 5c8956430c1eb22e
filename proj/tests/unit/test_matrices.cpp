#include <doctest.h>

#include <tuple>
#include <vector>

#include "slword/matrices.hpp"
#include "slword/rng.hpp"

using namespace slword;

namespace {

// Cofactor expansion along the first row; deliberately unrelated to the
// library's Bareiss path.
Int det_oracle(const ModMatrix& g) {
  int m = g.m();
  if (m == 1) return g.at(0, 0);
  Int acc = 0;
  for (int j = 0; j < m; ++j) {
    ModMatrix minor(g.ring(), m - 1);
    for (int r = 1; r < m; ++r) {
      int cc = 0;
      for (int c = 0; c < m; ++c) {
        if (c == j) continue;
        minor.set(r - 1, cc++, g.at(r, c));
      }
    }
    Int term = g.ring().mul(g.at(0, j), det_oracle(minor));
    acc = j % 2 == 0 ? g.ring().add(acc, term) : g.ring().sub(acc, term);
  }
  return acc;
}

}  // namespace

TEST_CASE("group order matches brute-force counts") {
  // All 2x2 matrices over Z/3 and Z/9, counting det == 1 directly.
  for (int n : {1, 2}) {
    ZpRing r = ZpRing::make(3, n);
    long q = n == 1 ? 3 : 9;
    long count = 0;
    for (long a = 0; a < q; ++a)
      for (long b = 0; b < q; ++b)
        for (long c = 0; c < q; ++c)
          for (long d = 0; d < q; ++d)
            if (r.reduce(a * d - b * c) == 1) ++count;
    CHECK(group_order(3, 2, n) == count);
  }
  CHECK(group_order(3, 2, 1) == 24);
  CHECK(group_order(3, 2, 2) == 648);
  CHECK(group_order(3, 3, 1) == 5616);
  CHECK(group_order(5, 2, 1) == 120);
  // 24 * 3^15: three extra digits per level past n = 1.
  CHECK(group_order(3, 2, 6) == Int("344373768"));
  CHECK(group_order(GroupSpec::make(3, 3, 2)) == Int(5616) * 6561);
}

TEST_CASE("det agrees with cofactor expansion for larger m") {
  Rng rng(2024);
  for (auto [p, w, m] : std::vector<std::tuple<std::int64_t, int, int>>{
           {3, 4, 4}, {5, 3, 5}, {7, 2, 6}}) {
    ZpRing r = ZpRing::make(p, w);
    for (int t = 0; t < 25; ++t) {
      ModMatrix g = rng.matrix(r, m);
      CHECK(g.det() == det_oracle(g));
    }
  }
  // Matrices with non-unit pivots everywhere still get exact determinants.
  ZpRing r = ZpRing::make(3, 4);
  ModMatrix g(r, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g.set(i, j, 3 * (i + 2 * j + 1));
  CHECK(g.det() == det_oracle(g));
}

TEST_CASE("inverse round trips and rejects non-units") {
  Rng rng(99);
  for (int m : {2, 3, 4, 5}) {
    GroupSpec spec = GroupSpec::make(m <= 3 ? 3 : 7, m, 3);
    ZpRing r = spec.ring();
    for (int t = 0; t < 20; ++t) {
      ModMatrix g = rng.sl_element(spec);
      ModMatrix inv = g.inverse();
      CHECK(g * inv == ModMatrix::identity(r, m));
      CHECK(inv * g == ModMatrix::identity(r, m));
    }
  }
  ZpRing r = ZpRing::make(3, 2);
  ModMatrix z(r, 2);
  z.set(0, 0, 3);
  z.set(1, 1, 3);
  CHECK_THROWS_AS(z.inverse(), Singular);
}

TEST_CASE("exhaustive 2x2 inversion mod 9") {
  ZpRing r = ZpRing::make(3, 2);
  int invertible = 0;
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b)
      for (int c = 0; c < 9; ++c)
        for (int d = 0; d < 9; ++d) {
          ModMatrix g = ModMatrix::from_rows(r, {{a, b}, {c, d}});
          if (r.is_unit(g.det())) {
            ++invertible;
            CHECK(g * g.inverse() == ModMatrix::identity(r, 2));
          } else {
            CHECK_THROWS_AS(g.inverse(), Singular);
          }
        }
  // |GL_2(Z/9)| = 9^4 * (1-1/3)(1-1/9) * ... = 3888.
  CHECK(invertible == 3888);
}

TEST_CASE("congruence level") {
  ZpRing r = ZpRing::make(3, 4);
  ModMatrix id = ModMatrix::identity(r, 2);
  CHECK(id.congruence_level() == 4);
  CHECK(id.is_identity());
  for (int k = 0; k < 4; ++k) {
    ModMatrix g = id;
    g.set(0, 1, r.p_pow(k));
    CHECK(g.congruence_level() == k);
  }
  ModMatrix h(r, 2);
  h.set(0, 0, 1 + 9);
  h.set(1, 1, 1);
  CHECK(h.congruence_level() == 2);
}

TEST_CASE("project and lift change only the exponent") {
  ZpRing r = ZpRing::make(3, 4);
  ModMatrix g = ModMatrix::from_rows(r, {{80, 27}, {5, 62}});
  ModMatrix q = g.project(2);
  CHECK(q.ring().w() == 2);
  CHECK(q.at(0, 0) == 80 % 9);
  CHECK(q.at(0, 1) == 0);
  ModMatrix back = q.lift(4);
  CHECK(back.ring() == r);
  CHECK(back.at(0, 0) == 80 % 9);
  CHECK(g.project(4) == g);
  CHECK(g.lift(4) == g);
}

TEST_CASE("sl_lift keeps determinant exactly 1") {
  Rng rng(5);
  GroupSpec low = GroupSpec::make(3, 2, 2);
  for (int t = 0; t < 50; ++t) {
    ModMatrix g = rng.sl_element(low);
    ModMatrix lifted = sl_lift(g, 7);
    CHECK(lifted.ring().w() == 7);
    CHECK(lifted.det() == 1);
    CHECK(lifted.project(2) == g);
  }
  GroupSpec big = GroupSpec::make(5, 3, 3);
  for (int t = 0; t < 20; ++t) {
    ModMatrix g = rng.sl_element(big);
    ModMatrix lifted = sl_lift(g, 9);
    CHECK(lifted.det() == 1);
    CHECK(lifted.project(3) == g);
  }
}

TEST_CASE("commutator and conjugate match their definitions") {
  Rng rng(77);
  GroupSpec spec = GroupSpec::make(3, 3, 3);
  for (int t = 0; t < 10; ++t) {
    ModMatrix g = rng.sl_element(spec);
    ModMatrix h = rng.sl_element(spec);
    CHECK(ModMatrix::commutator(g, h) ==
          g.inverse() * h.inverse() * g * h);
    CHECK(ModMatrix::conjugate(g, h) == h.inverse() * g * h);
    CHECK(ModMatrix::commutator(g, g).is_identity());
  }
}

TEST_CASE("group spec validation") {
  CHECK_NOTHROW(GroupSpec::make(3, 2, 1));
  CHECK_NOTHROW(GroupSpec::make(3, 3, 5));
  CHECK_NOTHROW(GroupSpec::make(5, 5, 2));
  CHECK_NOTHROW(GroupSpec::make(3, 2, 4, 9));
  CHECK_THROWS_AS(GroupSpec::make(2, 2, 3), InvalidGroupSpec);
  CHECK_THROWS_AS(GroupSpec::make(3, 1, 3), InvalidGroupSpec);
  CHECK_THROWS_AS(GroupSpec::make(3, 4, 2), InvalidGroupSpec);
  CHECK_THROWS_AS(GroupSpec::make(3, 2, 0), InvalidGroupSpec);
  CHECK_THROWS_AS(GroupSpec::make(3, 2, 4, 3), InvalidGroupSpec);
  CHECK_THROWS_AS(GroupSpec::make(3, 17, 1), InvalidGroupSpec);
  GroupSpec s = GroupSpec::make(3, 2, 4);
  CHECK(s.w >= s.n);
}

TEST_CASE("matrix text form") {
  ZpRing r = ZpRing::make(3, 2);
  ModMatrix g = ModMatrix::from_rows(r, {{1, 2}, {3, 4}});
  CHECK(g.to_string() == "[[1, 2], [3, 4]]");
  CHECK(ModMatrix::identity(r, 2).to_string() == "[[1, 0], [0, 1]]");
}
