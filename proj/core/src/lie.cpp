#include "slword/lie.hpp"

namespace slword {

LieElement LieElement::from(const ModMatrix& a) {
  if (a.trace() != 0) {
    throw Error("LieElement: trace " + a.trace().str() + " != 0 in " +
                a.ring().describe());
  }
  return LieElement(a);
}

LieElement LieElement::zero(const ZpRing& ring, int m) {
  return LieElement(ModMatrix(ring, m));
}

int LieElement::min_valuation() const {
  int v = ring().w();
  for (int i = 0; i < m() && v > 0; ++i)
    for (int j = 0; j < m() && v > 0; ++j)
      v = std::min(v, ring().valuation(a_.at(i, j)));
  return v;
}

LieElement LieElement::operator+(const LieElement& o) const {
  return LieElement(a_ + o.a_);
}
LieElement LieElement::operator-(const LieElement& o) const {
  return LieElement(a_ - o.a_);
}
LieElement LieElement::operator-() const { return LieElement(-a_); }
LieElement LieElement::scaled(const Int& c) const {
  return LieElement(a_.scaled(c));
}
LieElement LieElement::project(int k) const {
  return LieElement(a_.project(k));
}
LieElement LieElement::lift(int k) const { return LieElement(a_.lift(k)); }

ModMatrix bracket(const ModMatrix& a, const ModMatrix& b) {
  return a * b - b * a;
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  return LieElement::from(bracket(a.mat(), b.mat()));
}

bool check_sl2_identity1(const ModMatrix& c, const ModMatrix& d) {
  ModMatrix lhs = bracket(bracket(c, d), c);
  const ZpRing& ring = c.ring();
  Int tr_cd = (c * d).trace();
  Int tr_cc = (c * c).trace();
  ModMatrix rhs = c.scaled(ring.reduce(2 * tr_cd)) -
                  d.scaled(ring.reduce(2 * tr_cc));
  return lhs == rhs;
}

bool check_sl2_identity2(const ModMatrix& a, const ModMatrix& b) {
  ModMatrix c = bracket(a, b);
  ModMatrix lhs = bracket(bracket(c, a), c);
  Int t = (c * c).trace();
  ModMatrix rhs = a.scaled(a.ring().reduce(-2 * t));
  return lhs == rhs;
}

std::pair<LieElement, LieElement> solve_bracket_sl2(const LieElement& a) {
  if (a.m() != 2) throw Error("solve_bracket_sl2: m != 2");
  const ZpRing& ring = a.ring();
  int l = a.min_valuation();
  if (l == ring.w()) {
    return {LieElement::zero(ring, 2), LieElement::zero(ring, 2)};
  }
  ModMatrix ap(ring, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      ap.set(i, j, ring.divide_exact(a.mat().at(i, j), l));

  Int u = ap.at(0, 0), v = ap.at(0, 1), w = ap.at(1, 0);
  ModMatrix b(ring, 2);
  if (ring.is_unit(w)) {
    b.set(0, 1, 1);
  } else if (ring.is_unit(v)) {
    b.set(1, 0, 1);
  } else if (ring.is_unit(u)) {
    b.set(0, 1, 1);
    b.set(1, 0, 1);
  } else {
    throw Error("solve_bracket_sl2: no unit entry after scaling");
  }

  ModMatrix c = bracket(ap, b);
  Int t = (c * c).trace();
  if (!ring.is_unit(t)) {
    throw Error("solve_bracket_sl2: probe trace not a unit");
  }
  Int beta = ring.invert(ring.reduce(-2 * t));
  ModMatrix a1 = bracket(c, ap).scaled(ring.mul(beta, ring.p_pow(l)));
  if (bracket(a1, c) != a.mat()) {
    throw Error("solve_bracket_sl2: internal identity check failed");
  }
  return {LieElement::from(a1), LieElement::from(c)};
}

LieElement reference_diagonal(const ZpRing& ring, int m) {
  ModMatrix d(ring, m);
  int slot = m % 2;  // odd m starts with a zero eigenvalue at slot 0
  for (int v = 1; slot < m; ++v) {
    d.set(slot, slot, v);
    ++slot;
    d.set(slot, slot, -v);
    ++slot;
  }
  return LieElement::from(d);
}

ModMatrix basis_change(const ZpRing& ring, int m) {
  ModMatrix g(ring, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j) g.set(i, j, 1);
  return g;
}

TwoBrackets solve_two_brackets(const LieElement& a) {
  const ZpRing& ring = a.ring();
  int m = a.m();
  LieElement d = reference_diagonal(ring, m);
  std::vector<Int> lam(m);
  for (int i = 0; i < m; ++i) lam[i] = d.mat().at(i, i);
  // All eigenvalue differences must be units; this is where p >= m bites.
  std::vector<std::vector<Int>> dinv(m, std::vector<Int>(m, Int(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      Int diff = ring.sub(lam[i], lam[j]);
      if (!ring.is_unit(diff)) {
        throw InvalidGroupSpec(
            "solve_two_brackets: eigenvalue difference not a unit (p < m?)");
      }
      dinv[i][j] = ring.invert(diff);
    }
  }

  ModMatrix g = basis_change(ring, m);
  ModMatrix ginv = g.inverse();
  auto conj = [&](const ModMatrix& x) { return ginv * x * g; };

  // diag(g^-1 E_{i,i+1} g) = E_ii - E_{i+1,i+1}, so prefix sums of diag(a)
  // as coefficients reproduce diag(a); the last slot closes because a is
  // traceless.
  ModMatrix n2(ring, m);
  Int prefix = 0;
  for (int i = 0; i + 1 < m; ++i) {
    prefix = ring.add(prefix, a.mat().at(i, i));
    n2.set(i, i + 1, ring.mul(prefix, dinv[i][i + 1]));
  }
  ModMatrix b1 = conj(d.mat());
  ModMatrix b2 = conj(n2);

  ModMatrix r = a.mat() - bracket(b1, b2);
  for (int i = 0; i < m; ++i) {
    if (r.at(i, i) != 0) {
      throw Error("solve_two_brackets: residual has nonzero diagonal");
    }
  }
  ModMatrix b4(ring, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      b4.set(i, j, ring.mul(r.at(i, j), dinv[i][j]));
    }
  }
  if (bracket(b1, b2) + bracket(d.mat(), b4) != a.mat()) {
    throw Error("solve_two_brackets: internal identity check failed");
  }
  return TwoBrackets{LieElement::from(b1), LieElement::from(b2), d,
                     LieElement::from(b4)};
}

}  // namespace slword
