#include "slword/residues.hpp"

#include <sstream>

namespace slword {

namespace {

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

ZpRing::ZpRing(std::int64_t p, int w, Int modulus)
    : p_(p), w_(w), modulus_(std::move(modulus)) {}

ZpRing ZpRing::make(std::int64_t p, int w) {
  if (!is_odd_prime(p)) {
    throw InvalidGroupSpec("ZpRing: p must be an odd prime, got " +
                           std::to_string(p));
  }
  if (w < 1 || w > 4096) {
    throw InvalidGroupSpec("ZpRing: exponent out of range: " +
                           std::to_string(w));
  }
  Int modulus = 1;
  for (int i = 0; i < w; ++i) modulus *= p;
  return ZpRing(p, w, std::move(modulus));
}

Int ZpRing::p_pow(int e) const {
  if (e < 0 || e > w_) {
    throw Error("ZpRing::p_pow: exponent " + std::to_string(e) +
                " outside [0, " + std::to_string(w_) + "]");
  }
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= p_;
  return r;
}

Int ZpRing::reduce(const Int& x) const {
  Int r = x % modulus_;
  if (r < 0) r += modulus_;
  return r;
}

int ZpRing::valuation(const Int& x) const {
  Int r = reduce(x);
  if (r == 0) return w_;
  int v = 0;
  while (r % p_ == 0) {
    r /= p_;
    ++v;
  }
  return v;
}

Int ZpRing::invert(const Int& x) const {
  Int a = reduce(x);
  if (a == 0 || a % p_ == 0) {
    throw Singular("invert: " + a.str() + " is not a unit in " + describe());
  }
  // Extended Euclid for a*s + m*t = 1; gcd is 1 since a is a unit.
  Int old_r = a, r = modulus_;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return reduce(old_s);
}

Int ZpRing::divide_exact(const Int& x, int e) const {
  Int r = reduce(x);
  Int pe = p_pow(e);
  if (r % pe != 0) {
    throw Error("divide_exact: valuation below " + std::to_string(e) +
                " in " + describe());
  }
  return r / pe;
}

Int ZpRing::div_by(const Int& x, std::uint64_t j) const {
  if (j == 0) throw Error("div_by: zero divisor");
  int a = 0;
  std::uint64_t u = j;
  while (u % static_cast<std::uint64_t>(p_) == 0) {
    u /= static_cast<std::uint64_t>(p_);
    ++a;
  }
  Int q = divide_exact(x, a);
  if (u == 1) return reduce(q);
  return mul(q, invert(Int(u)));
}

std::string ZpRing::describe() const {
  std::ostringstream os;
  os << "Z/" << p_ << "^" << w_;
  return os.str();
}

void require_same_ring(const ZpRing& a, const ZpRing& b, const char* op) {
  if (a != b) {
    throw InvalidGroupSpec(std::string(op) + ": ring mismatch, " +
                           a.describe() + " vs " + b.describe());
  }
}

}  // namespace slword
