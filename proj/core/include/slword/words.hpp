#ifndef SLWORD_WORDS_HPP
#define SLWORD_WORDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "slword/matrices.hpp"

namespace slword {

// Letter i in [1, |S|] is the i-th generator; -i is its inverse.  0 never
// appears.
using Letter = std::int32_t;

struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  static Word concat(const Word& u, const Word& v);
  Word inverse() const;
  // Free reduction: repeatedly cancel adjacent (l, -l) pairs.
  Word reduced() const;
  // u^-1 v^-1 u v, unreduced, so the length is exactly 2(|u| + |v|).
  static Word commutator(const Word& u, const Word& v);

  // Comma-separated letters, e.g. "1,-2,1,1"; empty string is the empty
  // word.  parse throws ParseError on anything else.
  static Word parse(const std::string& text);
  std::string format() const;

  bool operator==(const Word& o) const { return letters == o.letters; }
};

/**
 * A generating set for SL_m(Z/p^n Z): the group parameters plus the
 * generator matrices at exponent n.  Every generator must have determinant
 * exactly 1; inverses are precomputed.  Note that validity as a set of
 * matrices does not mean the set generates; that is discovered when a base
 * table is built.
 */
class GeneratingSet {
 public:
  GeneratingSet(const GroupSpec& spec, std::vector<ModMatrix> gens);

  const GroupSpec& spec() const { return spec_; }
  int size() const { return static_cast<int>(gens_.size()); }
  const ModMatrix& gen(int i) const { return gens_.at(i); }            // 0-based
  const ModMatrix& gen_inverse(int i) const { return inv_.at(i); }

  // Image of a letter at the group exponent n.
  const ModMatrix& letter_image(Letter l) const;

 private:
  GroupSpec spec_;
  std::vector<ModMatrix> gens_;
  std::vector<ModMatrix> inv_;
};

// Product of letter images at exponent k (1 <= k <= n).  evaluate uses a
// fixed-width engine when p^k fits below 2^31 and exact bignum arithmetic
// otherwise; evaluate_exact always takes the bignum path.  The two agree
// wherever both apply.
ModMatrix evaluate(const Word& w, const GeneratingSet& S, int k);
ModMatrix evaluate_exact(const Word& w, const GeneratingSet& S, int k);

}  // namespace slword

#endif
