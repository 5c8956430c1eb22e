#ifndef SLWORD_BASE_TABLE_HPP
#define SLWORD_BASE_TABLE_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include "slword/words.hpp"

namespace slword {

struct SynthConfig {
  // The recursion bottoms out at congruence level n0; the base table is
  // built at exponent min(n0 + 1, n).
  int n0 = 1;
  // Largest state count for any exhaustive enumeration (full table, exact
  // diameter, level-1 coset search).
  std::uint64_t memory_budget = 10'000'000;
  // Initial forward-ball size for bidirectional coset searches; grown
  // geometrically up to memory_budget if a class is not met.
  std::uint64_t forward_cap = 1'000'000;
  // Produce depth-1 lifts through the truncated exponential instead of
  // I + p^l A.  The two agree at the working exponent, so this only
  // exercises a different code path.
  bool use_logexp_lift = false;
  // When set, base tables are cached here and reloaded (with full
  // verification) on the next construction over the same set.
  std::string cache_dir;
};

enum class TableMode { Full, Cosets };

/**
 * Words for the recursion floor.  Two shapes:
 *
 * Full: a complete breadth-first tree over G_b, b = min(n0+1, n), built
 * when |G_b| fits the budget.  Serves arbitrary elements of G_b.
 *
 * Cosets: a word for every element of G_1 plus one word per class of
 * Gamma_l / Gamma_{l+1} for 1 <= l <= n0, each found by bidirectional
 * search between the identity ball and the class.  Built when G_b is too
 * large to enumerate; serves exactly the lookups the recursion makes.
 *
 * All stored words are found by deterministic breadth-first search, so
 * they are shortest for their targets (within the searched region), and
 * rebuilding from the same set reproduces them exactly.
 */
class BaseTable {
 public:
  BaseTable(BaseTable&&) noexcept;
  BaseTable& operator=(BaseTable&&) noexcept;
  ~BaseTable();

  static BaseTable build(const GeneratingSet& S, const SynthConfig& cfg);

  TableMode mode() const;
  int level() const;  // b
  int n0() const { return level() - 1; }
  std::uint64_t entries() const;

  // Full mode only: word for any g in G_b (g at exponent b).
  Word word_for(const ModMatrix& g) const;
  // Word for an element of G_1.
  Word word_level0(const ModMatrix& g) const;
  // Word for some element congruent to delta mod p^(l+1), where delta == I
  // mod p^l; delta at exponent l+1, 1 <= l <= n0.
  Word word_level(const ModMatrix& delta, int ell) const;

  void save(std::ostream& os) const;
  void save_file(const std::string& path) const;
  // Reconstructs and re-verifies every record against S; throws ParseError
  // on any corruption or mismatch.
  static BaseTable load(std::istream& is, const GeneratingSet& S);
  static BaseTable load_file(const std::string& path, const GeneratingSet& S);

  // Deterministic name keyed by (p, m, b, generator entries mod p^b).
  static std::string cache_filename(const GeneratingSet& S, int n0);

 private:
  struct Impl;
  explicit BaseTable(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

}  // namespace slword

#endif
