#ifndef SLWORD_LIE_HPP
#define SLWORD_LIE_HPP

#include <utility>

#include "slword/matrices.hpp"

namespace slword {

/**
 * Traceless matrix over Z/p^w Z, i.e. an element of sl_m.  The trace
 * condition is checked once at construction and preserved by every
 * operation exposed here (brackets and conjugates of anything are
 * traceless; sums and scalings of traceless are traceless).
 */
class LieElement {
 public:
  static LieElement from(const ModMatrix& a);  // throws Error if trace != 0
  static LieElement zero(const ZpRing& ring, int m);

  const ModMatrix& mat() const { return a_; }
  const ZpRing& ring() const { return a_.ring(); }
  int m() const { return a_.m(); }

  // Smallest entry valuation; equals w for the zero element.
  int min_valuation() const;

  LieElement operator+(const LieElement& o) const;
  LieElement operator-(const LieElement& o) const;
  LieElement operator-() const;
  LieElement scaled(const Int& c) const;
  LieElement project(int k) const;
  LieElement lift(int k) const;
  bool operator==(const LieElement& o) const { return a_ == o.a_; }
  bool operator!=(const LieElement& o) const { return a_ != o.a_; }

 private:
  explicit LieElement(ModMatrix a) : a_(std::move(a)) {}
  ModMatrix a_;
};

// ab - ba.
ModMatrix bracket(const ModMatrix& a, const ModMatrix& b);
LieElement bracket(const LieElement& a, const LieElement& b);

// The two sl_2 polynomial identities underlying the single-bracket solver.
// Both hold exactly over any Z/p^w Z for traceless 2x2 inputs:
//   [[C,D],C]         == 2 Tr(CD) C - 2 Tr(C^2) D
//   [[[A,B],A],[A,B]] == -2 Tr([A,B]^2) A
bool check_sl2_identity1(const ModMatrix& c, const ModMatrix& d);
bool check_sl2_identity2(const ModMatrix& a, const ModMatrix& b);

/**
 * Single-bracket solver for m = 2: given a in sl_2(Z/p^k), produce
 * (A1, A2) with [A1, A2] = a exactly.
 *
 * Writing a = p^l a' with a' = [[u, v], [w, -u]] having a unit entry, the
 * probe B is chosen by the first unit among (w, v, u):
 *   w unit -> B = E12,       Tr([a',B]^2) =  2 w^2
 *   v unit -> B = E21,       Tr([a',B]^2) =  2 v^2
 *   u unit -> B = E12 + E21, Tr([a',B]^2) = -8 u^2
 * so t = Tr([a',B]^2) is a unit (p odd), and the second identity above
 * rearranges to a = [p^l (-2t)^{-1} [[a',B],a'], [a',B]].
 */
std::pair<LieElement, LieElement> solve_bracket_sl2(const LieElement& a);

// Fixed regular diagonal used by the two-bracket solver: eigenvalues
// (1, -1, 2, -2, ...) for even m and (0, 1, -1, 2, -2, ...) for odd m.
// All pairwise differences are nonzero mod p whenever p >= m (p odd).
LieElement reference_diagonal(const ZpRing& ring, int m);

// Lower-triangular all-ones matrix g; conjugation X -> g^-1 X g moves the
// superdiagonal onto the diagonal in the sense used by solve_two_brackets.
ModMatrix basis_change(const ZpRing& ring, int m);

struct TwoBrackets {
  LieElement b1, b2, b3, b4;
};

/**
 * General-m solver: a = [B1, B2] + [B3, B4] exactly, for a in sl_m(Z/p^k)
 * with p >= m.
 *
 * With D the reference diagonal and g the basis change, [D^g, E_{i,i+1}^g]
 * = (l_i - l_{i+1}) E_{i,i+1}^g, and diag(E_{i,i+1}^g) = E_ii - E_{i+1,i+1}.
 * Prefix sums of diag(a) therefore pick coefficients making
 * [D^g, N^g] match a on the diagonal; the residue is diagonal-free and is
 * cleared by a second bracket against D itself, entry by entry.
 */
TwoBrackets solve_two_brackets(const LieElement& a);

}  // namespace slword

#endif
