#ifndef SLWORD_LOGEXP_HPP
#define SLWORD_LOGEXP_HPP

#include <cstdint>

#include "slword/lie.hpp"

namespace slword {

/**
 * Working-precision plan for a truncated p-adic series.
 *
 * terms is the largest series index that can still contribute below p^K
 * (term j of log has valuation >= j c - v_p(j), term j of exp has
 * valuation >= j c - v_p(j!)); every included division by j or j! is exact
 * on representatives but only trustworthy modulo p^(W - lost digits), so
 * the series runs at W = K + slack with slack covering the worst division,
 * and only then projects down to K.
 */
struct PrecisionBudget {
  int K;
  int slack;
  int terms;
};

// c is the congruence level (log) or minimum valuation (exp) of the input,
// clamped to [1, K].  Throws PrecisionExhausted if K + slack is absurd.
PrecisionBudget log_budget(std::int64_t p, int c, int K);
PrecisionBudget exp_budget(std::int64_t p, int c, int K);

// log(g) mod p^K for g == I mod p (NotCongruent otherwise) with det(g) == 1
// mod p^K.  The input may live at any exponent >= K; the result depends
// only on g mod p^K.  Output is traceless with min valuation >= the
// congruence level of g.
LieElement trunc_log(const ModMatrix& g, int K);

// exp(a) mod p^K for a with min valuation >= 1 (NotNilpotentEnough
// otherwise).  Result has determinant 1 and is congruent to I at the
// valuation of a.
ModMatrix trunc_exp(const LieElement& a, int K);

/**
 * Randomized check of the commutator square at levels (i, j, k), k <=
 * min(i, j): classes alpha = I + p^i A (mod p^(i+k)) and beta = I + p^j B
 * commute to I + p^(i+j) [A, B] (mod p^(i+j+k)), independently of the
 * class representatives, and the same congruence is visible through
 * trunc_log.  Each trial draws A, B and determinant-one representative
 * perturbations, then verifies all three statements exactly.
 */
struct DiagramReport {
  int trials = 0;
  int congruence_failures = 0;
  int log_failures = 0;
  int invariance_failures = 0;
  bool ok() const {
    return congruence_failures == 0 && log_failures == 0 &&
           invariance_failures == 0;
  }
};

DiagramReport verify_diagram(std::int64_t p, int i, int j, int k, int trials,
                             std::uint64_t seed, int m = 2);

}  // namespace slword

#endif
