#ifndef SLWORD_DIAMETER_HPP
#define SLWORD_DIAMETER_HPP

#include <cstdint>
#include <iosfwd>
#include <unordered_map>
#include <vector>

#include "slword/base_table.hpp"
#include "slword/packed.hpp"
#include "slword/words.hpp"

namespace slword {

/**
 * Exact word metric on all of G_n for one generating set, from a complete
 * breadth-first enumeration.  Only meaningful when |G_n| fits the budget;
 * beyond that the lab reports lengths, not distances.
 */
class DistanceMap {
 public:
  int diameter() const { return diameter_; }
  std::uint64_t count() const { return dist_.size(); }
  int distance(const ModMatrix& g) const;  // g at exponent n

 private:
  friend DistanceMap exact_distances(const GeneratingSet&, std::uint64_t);
  DistanceMap(packed::Engine eng, std::unordered_map<std::string, std::uint32_t> index,
              std::vector<std::uint32_t> dist, int diameter);
  packed::Engine eng_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::uint32_t> dist_;
  int diameter_;
};

// Throws TooLarge if |G_n| exceeds budget, NotGenerating if the set does
// not reach all of G_n.
DistanceMap exact_distances(const GeneratingSet& S, std::uint64_t budget);
int exact_diameter(const GeneratingSet& S, std::uint64_t budget);

struct WorstCaseResult {
  std::vector<ModMatrix> generators;  // the worst set found
  std::uint64_t seed = 0;             // per-set seed that produced it
  int diameter = 0;
  int sets_examined = 0;              // generating sets only
};

// Samples generating sets of the given size and returns the one with the
// largest exact diameter.  Non-generating samples are discarded (they do
// not count toward num_sets).
WorstCaseResult worst_case_sample(const GroupSpec& spec, int num_sets,
                                  int set_size, std::uint64_t seed,
                                  std::uint64_t budget);

struct BenchParams {
  std::int64_t p = 3;
  int m = 2;
  int n_lo = 2;
  int n_hi = 8;
  int sets_per_n = 3;
  int targets_per_set = 10;
  int set_size = 2;
  std::uint64_t seed = 1;
  SynthConfig synth;
  // 0 disables exact diameters; otherwise computed per row whenever |G_n|
  // fits this budget.
  std::uint64_t diameter_budget = 0;
};

struct BenchRow {
  std::int64_t p;
  int m;
  int n;
  std::uint64_t seed;
  int set_size;
  std::uint64_t max_len;
  double mean_len;
  std::int64_t diameter;  // -1 when not computed
  double group_order_log2;
  double slope_ref;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  // Least-squares slope of log(max_len) against log(n) over the fit
  // window; NaN when the window has fewer than two points.
  double fitted_exponent;
  int fit_lo;
  int fit_hi;
};

/**
 * Word-length growth measurement: for each n, samples generating sets,
 * synthesizes random targets through the full pipeline, verifies every
 * word (a failure aborts with the counterexample in the message), and
 * records length statistics.  Deterministic per (seed, n, set index).
 */
BenchResult bench_lengths(const BenchParams& params);

// CSV with the fixed header
// p,m,n,seed,set_size,max_len,mean_len,diameter,group_order_log,slope_ref
void emit_csv(std::ostream& os, const std::vector<BenchRow>& rows);
std::vector<BenchRow> parse_csv(std::istream& is);

// log2 of a positive big integer, good to double precision.
double log2_int(const Int& v);

}  // namespace slword

#endif
