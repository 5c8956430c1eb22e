#ifndef SLWORD_SYNTHESIZER_HPP
#define SLWORD_SYNTHESIZER_HPP

#include <cstddef>
#include <vector>

#include "slword/base_table.hpp"
#include "slword/words.hpp"

namespace slword {

struct SynthStats {
  std::size_t raw_letters = 0;
  std::size_t reduced_letters = 0;
  std::size_t base_letters = 0;
  // Congruence levels consumed by the descent, in order; strictly
  // increasing by construction.
  std::vector<int> levels;
};

// Shape of one realize_level call: its own unreduced length and the
// recursive calls it made.  For m = 2 every internal node satisfies
// raw_len = 2 (children[0].raw_len + children[1].raw_len); for m > 2 the
// same bound holds per commutator with at most two of them.
struct RealizeTrace {
  int level = 0;
  std::size_t raw_len = 0;
  std::vector<RealizeTrace> children;
};

/**
 * Produces explicit words over a generating set.
 *
 * synthesize peels the target one congruence level at a time: a base-table
 * word accounts for the class modulo p^b, and each remaining level l is
 * cleared by realize_level, which splits l = ceil(l/2) + floor(l/2),
 * solves the class direction as a bracket (one for m = 2, a sum of two
 * for m > 2) and realizes it as (a product of) group commutators of
 * recursively synthesized deeper elements.  Every call re-evaluates its
 * own word exactly and throws VerifyFailure on mismatch, so a returned
 * word is always correct by construction.
 */
class Synthesizer {
 public:
  // Builds (or loads from cfg.cache_dir) the base table; NotGenerating and
  // TooLarge propagate from the table build.
  Synthesizer(GeneratingSet S, SynthConfig cfg = {});
  Synthesizer(GeneratingSet S, SynthConfig cfg, BaseTable table);

  const GeneratingSet& gens() const { return S_; }
  const SynthConfig& config() const { return cfg_; }
  const BaseTable& table() const { return table_; }

  // Word for some element congruent to delta mod p^(l+1); delta must be
  // congruent to I mod p^l, at exponent l+1, determinant 1.
  Word realize_level(const ModMatrix& delta, int ell,
                     RealizeTrace* trace = nullptr) const;

  // Word evaluating to target exactly at exponent n, freely reduced.
  Word synthesize(const ModMatrix& target, SynthStats* stats = nullptr) const;

 private:
  Word realize_inner(const ModMatrix& delta, int ell,
                     RealizeTrace* trace) const;
  ModMatrix depth_one_lift(const ModMatrix& a_mod_p, int lev) const;

  GeneratingSet S_;
  SynthConfig cfg_;
  BaseTable table_;
};

struct VerifyReport {
  bool ok;
  std::size_t raw_letters;
  std::size_t reduced_letters;
  ModMatrix actual;
};

// Evaluates w over S at exponent n and compares with target.
VerifyReport verify_word(const ModMatrix& target, const Word& w,
                         const GeneratingSet& S);

}  // namespace slword

#endif
