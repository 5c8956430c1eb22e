#ifndef SLWORD_RESIDUES_HPP
#define SLWORD_RESIDUES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "slword/errors.hpp"

namespace slword {

using Int = boost::multiprecision::cpp_int;

/**
 * The ring Z/p^w Z for an odd prime p, with every element kept as its
 * canonical representative in [0, p^w).  All arithmetic is exact; there is
 * no floating point anywhere downstream of this class.
 *
 * A ring is a small value type.  Two rings are interchangeable iff they
 * agree on (p, w), and operations across mismatched rings throw
 * InvalidGroupSpec rather than silently coercing.
 */
class ZpRing {
 public:
  // Throws InvalidGroupSpec unless p is an odd prime and 1 <= w <= 4096.
  static ZpRing make(std::int64_t p, int w);

  std::int64_t p() const { return p_; }
  int w() const { return w_; }
  const Int& modulus() const { return modulus_; }

  // p^e for 0 <= e <= w.
  Int p_pow(int e) const;

  Int reduce(const Int& x) const;
  Int add(const Int& a, const Int& b) const { return reduce(a + b); }
  Int sub(const Int& a, const Int& b) const { return reduce(a - b); }
  Int mul(const Int& a, const Int& b) const { return reduce(a * b); }
  Int neg(const Int& a) const { return reduce(-a); }

  // Largest e <= w with p^e dividing x; w for x == 0.
  int valuation(const Int& x) const;
  bool is_unit(const Int& x) const { return valuation(x) == 0; }

  // Multiplicative inverse of a unit, via extended Euclid against p^w.
  // Throws Singular on a non-unit.
  Int invert(const Int& x) const;

  // x / p^e as an integer; requires valuation(x) >= e, else throws Error.
  // The quotient of the canonical representative is exact, but note that it
  // determines the class of the p-adic quotient only modulo p^(w-e).
  Int divide_exact(const Int& x, int e) const;

  // x / j for an ordinary integer j > 0, as used in series evaluation.
  // Requires valuation(x) >= valuation(j); the result is trustworthy only
  // modulo p^(w - valuation(j)), which callers account for via slack.
  Int div_by(const Int& x, std::uint64_t j) const;

  bool operator==(const ZpRing& o) const { return p_ == o.p_ && w_ == o.w_; }
  bool operator!=(const ZpRing& o) const { return !(*this == o); }

  std::string describe() const;  // "Z/3^5" style, for error messages

 private:
  ZpRing(std::int64_t p, int w, Int modulus);
  std::int64_t p_;
  int w_;
  Int modulus_;
};

// Checks the ring arguments of a binary operation.  The op name lands in
// the error message.
void require_same_ring(const ZpRing& a, const ZpRing& b, const char* op);

/**
 * A residue bound to its ring.  Convenience wrapper used where operator
 * syntax keeps formulas readable (the Lie solvers, mostly); bulk storage
 * keeps raw Int entries plus one ring per matrix instead.
 */
class ResidueInt {
 public:
  ResidueInt(const ZpRing& ring, const Int& value)
      : ring_(ring), v_(ring.reduce(value)) {}

  const Int& value() const { return v_; }
  const ZpRing& ring() const { return ring_; }

  ResidueInt operator+(const ResidueInt& o) const {
    require_same_ring(ring_, o.ring_, "add");
    return ResidueInt(ring_, v_ + o.v_);
  }
  ResidueInt operator-(const ResidueInt& o) const {
    require_same_ring(ring_, o.ring_, "sub");
    return ResidueInt(ring_, v_ - o.v_);
  }
  ResidueInt operator*(const ResidueInt& o) const {
    require_same_ring(ring_, o.ring_, "mul");
    return ResidueInt(ring_, v_ * o.v_);
  }
  ResidueInt operator-() const { return ResidueInt(ring_, -v_); }

  ResidueInt inv() const { return ResidueInt(ring_, ring_.invert(v_)); }
  int val() const { return ring_.valuation(v_); }
  bool is_unit() const { return ring_.is_unit(v_); }
  bool operator==(const ResidueInt& o) const {
    return ring_ == o.ring_ && v_ == o.v_;
  }

 private:
  ZpRing ring_;
  Int v_;
};

}  // namespace slword

#endif
