#include "slword/logexp.hpp"

#include <algorithm>

#include "slword/rng.hpp"

namespace slword {

namespace {

constexpr int kMaxWorkingExponent = 4096;

int floor_log(std::int64_t p, std::int64_t x) {
  int e = 0;
  while (x >= p) {
    x /= p;
    ++e;
  }
  return e;
}

// v_p(j!) by Legendre.
std::int64_t factorial_valuation(std::int64_t p, std::int64_t j) {
  std::int64_t v = 0;
  for (std::int64_t q = p; q <= j; q *= p) v += j / q;
  return v;
}

void check_budget_inputs(std::int64_t p, int c, int K) {
  if (p < 3) throw Error("budget: p must be an odd prime");
  if (K < 1) throw Error("budget: K must be >= 1");
  if (c < 1) throw Error("budget: c must be >= 1");
}

ModMatrix divide_matrix(const ModMatrix& x, std::uint64_t j) {
  ModMatrix r(x.ring(), x.m());
  for (int i = 0; i < x.m(); ++i)
    for (int l = 0; l < x.m(); ++l) r.set(i, l, x.ring().div_by(x.at(i, l), j));
  return r;
}

bool is_zero(const ModMatrix& x) {
  for (int i = 0; i < x.m(); ++i)
    for (int j = 0; j < x.m(); ++j)
      if (x.at(i, j) != 0) return false;
  return true;
}

}  // namespace

PrecisionBudget log_budget(std::int64_t p, int c, int K) {
  check_budget_inputs(p, c, K);
  if (c > K) c = K;
  // Term j contributes only if j c - floor(log_p j) < K; that bound is
  // nondecreasing in j, so scan for the first non-contributing index.
  int terms = 0;
  for (std::int64_t j = 1;; ++j) {
    std::int64_t bound = j * c - floor_log(p, j);
    if (bound >= K) break;
    terms = static_cast<int>(j);
  }
  int slack = terms > 0 ? floor_log(p, terms) : 0;
  if (K + slack > kMaxWorkingExponent) {
    throw PrecisionExhausted("log_budget: K + slack exceeds limit");
  }
  return PrecisionBudget{K, slack, terms};
}

PrecisionBudget exp_budget(std::int64_t p, int c, int K) {
  check_budget_inputs(p, c, K);
  if (c > K) c = K;
  // Term j contributes only if j c - (j-1)/(p-1) < K, i.e.
  // j c (p-1) - (j-1) < K (p-1); strictly increasing in j for c >= 1.
  int terms = 0;
  for (std::int64_t j = 1;; ++j) {
    if (j * c * (p - 1) - (j - 1) >= static_cast<std::int64_t>(K) * (p - 1))
      break;
    terms = static_cast<int>(j);
  }
  int slack =
      terms > 0 ? static_cast<int>(factorial_valuation(p, terms)) : 0;
  if (K + slack > kMaxWorkingExponent) {
    throw PrecisionExhausted("exp_budget: K + slack exceeds limit");
  }
  return PrecisionBudget{K, slack, terms};
}

LieElement trunc_log(const ModMatrix& g, int K) {
  if (g.ring().w() < K) {
    throw Error("trunc_log: input exponent below K");
  }
  ModMatrix gk = g.ring().w() == K ? g : g.project(K);
  int c = gk.congruence_level();
  if (c == 0) {
    throw NotCongruent("trunc_log: input is not congruent to I mod p");
  }
  if (gk.det() != 1) {
    throw Error("trunc_log: determinant is not 1 at exponent " +
                std::to_string(K));
  }
  const ZpRing& base = gk.ring();
  if (c >= K) return LieElement::zero(base, g.m());

  PrecisionBudget budget = log_budget(base.p(), c, K);
  ZpRing work = ZpRing::make(base.p(), K + budget.slack);
  ModMatrix u = gk.lift(K + budget.slack) - ModMatrix::identity(work, g.m());
  ModMatrix acc(work, g.m());
  ModMatrix pw = u;
  for (int j = 1; j <= budget.terms; ++j) {
    ModMatrix term = divide_matrix(pw, static_cast<std::uint64_t>(j));
    acc = (j % 2 == 1) ? acc + term : acc - term;
    if (j < budget.terms) {
      pw = pw * u;
      if (is_zero(pw)) break;
    }
  }
  return LieElement::from(acc.project(K));
}

ModMatrix trunc_exp(const LieElement& a, int K) {
  if (a.ring().w() < K) {
    throw Error("trunc_exp: input exponent below K");
  }
  LieElement ak = a.ring().w() == K ? a : a.project(K);
  int c = ak.min_valuation();
  if (c == 0) {
    throw NotNilpotentEnough("trunc_exp: input has a unit entry");
  }
  const ZpRing& base = ak.ring();
  if (c >= K) return ModMatrix::identity(base, a.m());

  PrecisionBudget budget = exp_budget(base.p(), c, K);
  ZpRing work = ZpRing::make(base.p(), K + budget.slack);
  ModMatrix x = ak.mat().lift(K + budget.slack);
  ModMatrix acc = ModMatrix::identity(work, a.m());
  ModMatrix pw = ModMatrix::identity(work, a.m());
  Int fact = 1;
  for (int j = 1; j <= budget.terms; ++j) {
    pw = pw * x;
    if (is_zero(pw)) break;
    fact *= j;
    // Divide by j! digit-exactly: strip p-part, invert the unit part.
    ModMatrix term(work, a.m());
    int fv = static_cast<int>(factorial_valuation(base.p(), j));
    Int unit = fact / work.p_pow(fv);
    Int uinv = work.invert(unit);
    for (int r = 0; r < a.m(); ++r)
      for (int s = 0; s < a.m(); ++s)
        term.set(r, s, work.mul(work.divide_exact(pw.at(r, s), fv), uinv));
    acc = acc + term;
  }
  ModMatrix out = acc.project(K);
  if (out.det() != 1) {
    throw Error("trunc_exp: internal determinant check failed");
  }
  return out;
}

namespace {

// Determinant-one representative of the class I + p^lvl A, at exponent K.
ModMatrix class_representative(const LieElement& a_modpk, int lvl, int K) {
  const ZpRing& small = a_modpk.ring();
  ZpRing big = ZpRing::make(small.p(), K);
  ModMatrix g = ModMatrix::identity(big, a_modpk.m());
  Int pl = big.p_pow(lvl);
  for (int i = 0; i < a_modpk.m(); ++i)
    for (int j = 0; j < a_modpk.m(); ++j)
      g.set(i, j, g.at(i, j) + pl * a_modpk.mat().at(i, j));
  Int dinv = big.invert(g.det());
  for (int j = 0; j < a_modpk.m(); ++j) g.set(0, j, g.at(0, j) * dinv);
  return g;
}

}  // namespace

DiagramReport verify_diagram(std::int64_t p, int i, int j, int k, int trials,
                             std::uint64_t seed, int m) {
  if (i < 1 || j < 1 || k < 1 || k > std::min(i, j)) {
    throw Error("verify_diagram: need 1 <= k <= min(i, j)");
  }
  int K = i + j + k;
  ZpRing small = ZpRing::make(p, k);
  ZpRing big = ZpRing::make(p, K);
  Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i),
                   static_cast<std::uint64_t>(j),
                   static_cast<std::uint64_t>(k)));
  DiagramReport report;
  report.trials = trials;
  Int pij = big.p_pow(i + j);

  for (int t = 0; t < trials; ++t) {
    LieElement a = LieElement::from(rng.traceless(small, m));
    LieElement b = LieElement::from(rng.traceless(small, m));
    ModMatrix alpha0 = class_representative(a, i, K);
    ModMatrix beta0 = class_representative(b, j, K);
    ModMatrix alpha = alpha0 * rng.congruent_identity(big, m, i + k);
    ModMatrix beta = beta0 * rng.congruent_identity(big, m, j + k);

    ModMatrix comm = ModMatrix::commutator(alpha, beta);
    ModMatrix expected = ModMatrix::identity(big, m);
    ModMatrix ab = bracket(a.mat(), b.mat());
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s)
        expected.set(r, s, expected.at(r, s) + pij * ab.at(r, s));

    if (comm.project(K) != expected) {
      // K equals i+j+k, so the congruence is checked at full precision.
      ++report.congruence_failures;
    }
    ModMatrix comm0 = ModMatrix::commutator(alpha0, beta0);
    if (comm != comm0) ++report.invariance_failures;

    LieElement lg = trunc_log(comm, K);
    ModMatrix scaled_ab(big, m);
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s)
        scaled_ab.set(r, s, pij * ab.at(r, s));
    if (lg.mat() != scaled_ab) ++report.log_failures;
  }
  return report;
}

}  // namespace slword
