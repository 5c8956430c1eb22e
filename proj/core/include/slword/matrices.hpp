#ifndef SLWORD_MATRICES_HPP
#define SLWORD_MATRICES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "slword/residues.hpp"

namespace slword {

/**
 * Square matrix over Z/p^w Z, row major, entries canonical.
 *
 * Determinants are computed exactly: direct expansion for m <= 3 and
 * fraction-free (Bareiss) elimination over the integer representatives for
 * larger m, so no unit pivots are ever needed just to evaluate det.
 * Inversion uses the adjugate for m <= 3 and Gauss-Jordan with unit pivot
 * selection otherwise; a non-unit determinant throws Singular.
 */
class ModMatrix {
 public:
  ModMatrix(const ZpRing& ring, int m);  // zero matrix
  static ModMatrix identity(const ZpRing& ring, int m);
  static ModMatrix from_rows(const ZpRing& ring,
                             const std::vector<std::vector<Int>>& rows);

  int m() const { return m_; }
  const ZpRing& ring() const { return ring_; }

  const Int& at(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, const Int& v) { a_[idx(i, j)] = ring_.reduce(v); }

  ModMatrix operator*(const ModMatrix& o) const;
  ModMatrix operator+(const ModMatrix& o) const;
  ModMatrix operator-(const ModMatrix& o) const;
  ModMatrix operator-() const;
  ModMatrix scaled(const Int& c) const;

  Int trace() const;
  Int det() const;
  ModMatrix inverse() const;

  bool is_identity() const;
  // Largest k with this == I mod p^k; equals w for the identity itself.
  int congruence_level() const;

  // Change of presentation exponent, keeping p.  project reduces (k <= w),
  // lift reinterprets the canonical representatives (k >= w).
  ModMatrix project(int k) const;
  ModMatrix lift(int k) const;

  // g^-1 h^-1 g h and h^-1 g h.
  static ModMatrix commutator(const ModMatrix& g, const ModMatrix& h);
  static ModMatrix conjugate(const ModMatrix& g, const ModMatrix& h);

  bool operator==(const ModMatrix& o) const;
  bool operator!=(const ModMatrix& o) const { return !(*this == o); }

  std::string to_string() const;  // nested-list form, e.g. [[1, 0], [0, 1]]

 private:
  int idx(int i, int j) const;
  ZpRing ring_;
  int m_;
  std::vector<Int> a_;
};

/**
 * Parameters of G = SL_m(Z/p^n Z) together with a working exponent w >= n
 * used for intermediate arithmetic.  Validation enforces the supported
 * family: p an odd prime, m >= 2, and p >= m when m > 2.  (For m = 2 every
 * odd prime is fine.)
 */
struct GroupSpec {
  std::int64_t p;
  int m;
  int n;
  int w;

  static GroupSpec make(std::int64_t p, int m, int n, int w = -1);

  ZpRing ring() const { return ZpRing::make(p, n); }
  ZpRing ring_at(int k) const { return ZpRing::make(p, k); }
  ZpRing working_ring() const { return ZpRing::make(p, w); }
};

// |SL_m(Z/p^n Z)| = p^((n-1)(m^2-1)) * p^(m(m-1)/2) * prod_{i=2}^{m} (p^i - 1).
Int group_order(const GroupSpec& spec);
Int group_order(std::int64_t p, int m, int n);

// Lift g (determinant 1 at its own exponent w) to exponent k >= w with
// determinant exactly 1: the naive lift's determinant is a unit congruent
// to 1 mod p^w, and scaling the first row by its inverse fixes it without
// moving the projection back to exponent w.
ModMatrix sl_lift(const ModMatrix& g, int k);

}  // namespace slword

#endif
