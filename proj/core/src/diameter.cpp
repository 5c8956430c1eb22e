#include "slword/diameter.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>

#include "search_internal.hpp"
#include "slword/rng.hpp"
#include "slword/synthesizer.hpp"

namespace slword {

DistanceMap::DistanceMap(packed::Engine eng,
                         std::unordered_map<std::string, std::uint32_t> index,
                         std::vector<std::uint32_t> dist, int diameter)
    : eng_(std::move(eng)),
      index_(std::move(index)),
      dist_(std::move(dist)),
      diameter_(diameter) {}

int DistanceMap::distance(const ModMatrix& g) const {
  if (g.ring().p() != eng_.p() || g.ring().w() != eng_.k() ||
      g.m() != eng_.m()) {
    throw Error("distance: element is not at the map's exponent");
  }
  auto it = index_.find(eng_.encode_bytes(eng_.from_mod(g)));
  if (it == index_.end()) {
    throw Error("distance: element not in the group ball (determinant?)");
  }
  return static_cast<int>(dist_[it->second]);
}

DistanceMap exact_distances(const GeneratingSet& S, std::uint64_t budget) {
  const GroupSpec& spec = S.spec();
  Int order = group_order(spec);
  if (order > Int(budget)) {
    throw TooLarge("exact_distances: |G| = " + order.str() +
                   " exceeds the budget " + std::to_string(budget));
  }
  detail::StepImages steps = detail::StepImages::make(S, spec.n);
  std::uint64_t cap = order.convert_to<std::uint64_t>() + 1;
  detail::BfsTree tree = detail::forward_ball(steps, cap);
  if (Int(tree.key_of.size()) < order) {
    throw NotGenerating("exact_distances: the set reaches " +
                        std::to_string(tree.key_of.size()) + " of " +
                        order.str() + " elements");
  }
  int diameter = static_cast<int>(tree.dist.back());
  return DistanceMap(steps.eng, std::move(tree.index), std::move(tree.dist),
                     diameter);
}

int exact_diameter(const GeneratingSet& S, std::uint64_t budget) {
  return exact_distances(S, budget).diameter();
}

WorstCaseResult worst_case_sample(const GroupSpec& spec, int num_sets,
                                  int set_size, std::uint64_t seed,
                                  std::uint64_t budget) {
  if (num_sets < 1 || set_size < 1) {
    throw Error("worst_case_sample: need at least one set and one generator");
  }
  WorstCaseResult best;
  int examined = 0;
  for (std::uint64_t attempt = 0; examined < num_sets; ++attempt) {
    if (attempt >= 100ULL * static_cast<std::uint64_t>(num_sets)) {
      throw NotGenerating(
          "worst_case_sample: random sets keep failing to generate");
    }
    std::uint64_t set_seed = mix_seed(seed, attempt);
    Rng rng(set_seed);
    std::vector<ModMatrix> gens;
    gens.reserve(set_size);
    for (int i = 0; i < set_size; ++i) gens.push_back(rng.sl_element(spec));
    GeneratingSet S(spec, gens);
    int diam;
    try {
      diam = exact_diameter(S, budget);
    } catch (const NotGenerating&) {
      continue;
    }
    ++examined;
    if (diam > best.diameter || examined == 1) {
      best.generators = std::move(gens);
      best.seed = set_seed;
      best.diameter = diam;
    }
  }
  best.sets_examined = examined;
  return best;
}

BenchResult bench_lengths(const BenchParams& params) {
  if (params.n_lo < 1 || params.n_hi < params.n_lo) {
    throw Error("bench_lengths: bad n range");
  }
  if (params.sets_per_n < 1 || params.targets_per_set < 1 ||
      params.set_size < 1) {
    throw Error("bench_lengths: counts must be positive");
  }
  BenchResult result;
  for (int n = params.n_lo; n <= params.n_hi; ++n) {
    GroupSpec spec = GroupSpec::make(params.p, params.m, n);
    Int order = group_order(spec);
    for (int t = 0; t < params.sets_per_n; ++t) {
      std::uint64_t row_seed = mix_seed(params.seed,
                                        static_cast<std::uint64_t>(n),
                                        static_cast<std::uint64_t>(t));
      Rng rng(row_seed);

      // Rejection-sample a generating set; building the base table is the
      // generation certificate.
      std::unique_ptr<Synthesizer> synth;
      std::vector<ModMatrix> gens;
      for (int attempt = 0;; ++attempt) {
        if (attempt >= 256) {
          throw NotGenerating(
              "bench_lengths: random sets keep failing to generate");
        }
        gens.clear();
        for (int i = 0; i < params.set_size; ++i)
          gens.push_back(rng.sl_element(spec));
        try {
          synth = std::make_unique<Synthesizer>(GeneratingSet(spec, gens),
                                                params.synth);
          break;
        } catch (const NotGenerating&) {
        }
      }

      std::uint64_t max_len = 0;
      double total_len = 0;
      for (int j = 0; j < params.targets_per_set; ++j) {
        ModMatrix target = rng.sl_element(spec);
        Word w = synth->synthesize(target);
        VerifyReport rep = verify_word(target, w, synth->gens());
        if (!rep.ok) {
          throw VerifyFailure("bench_lengths: word " + w.format() +
                              " evaluates to " + rep.actual.to_string() +
                              " instead of " + target.to_string() +
                              " (p=" + std::to_string(params.p) +
                              ", m=" + std::to_string(params.m) +
                              ", n=" + std::to_string(n) +
                              ", seed=" + std::to_string(row_seed) + ")");
        }
        max_len = std::max<std::uint64_t>(max_len, w.size());
        total_len += static_cast<double>(w.size());
      }

      std::int64_t diameter = -1;
      if (params.diameter_budget > 0 && order <= Int(params.diameter_budget)) {
        diameter = exact_diameter(synth->gens(), params.diameter_budget);
      }
      result.rows.push_back(BenchRow{
          params.p, params.m, n, row_seed, params.set_size, max_len,
          total_len / params.targets_per_set, diameter, log2_int(order),
          params.m == 2 ? 3.0 : 4.0});
    }
  }

  // Fit log(max over sets of max_len) against log n on [max(4, n_lo), n_hi].
  result.fit_lo = std::max(4, params.n_lo);
  result.fit_hi = params.n_hi;
  std::vector<std::pair<double, double>> pts;
  for (int n = result.fit_lo; n <= result.fit_hi; ++n) {
    std::uint64_t mx = 0;
    for (const BenchRow& row : result.rows) {
      if (row.n == n) mx = std::max(mx, row.max_len);
    }
    if (mx > 0) {
      pts.emplace_back(std::log(static_cast<double>(n)),
                       std::log(static_cast<double>(mx)));
    }
  }
  if (pts.size() < 2) {
    result.fitted_exponent = std::nan("");
  } else {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double num = pts.size() * sxy - sx * sy;
    double den = pts.size() * sxx - sx * sx;
    result.fitted_exponent = num / den;
  }
  return result;
}

namespace {

constexpr const char* kCsvHeader =
    "p,m,n,seed,set_size,max_len,mean_len,diameter,group_order_log,slope_ref";

double parse_double(const std::string& s) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    throw ParseError("csv: bad number '" + s + "'");
  }
  return v;
}

long long parse_ll(const std::string& s) {
  char* end = nullptr;
  long long v = std::strtoll(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0') {
    throw ParseError("csv: bad integer '" + s + "'");
  }
  return v;
}

unsigned long long parse_ull(const std::string& s) {
  char* end = nullptr;
  unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0') {
    throw ParseError("csv: bad integer '" + s + "'");
  }
  return v;
}

}  // namespace

void emit_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << kCsvHeader << "\n";
  char buf[64];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::string(buf);
  };
  for (const BenchRow& r : rows) {
    os << r.p << ',' << r.m << ',' << r.n << ',' << r.seed << ','
       << r.set_size << ',' << r.max_len << ',' << fmt(r.mean_len) << ','
       << r.diameter << ',' << fmt(r.group_order_log2) << ','
       << fmt(r.slope_ref) << "\n";
  }
}

std::vector<BenchRow> parse_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw ParseError("csv: unexpected header");
  std::vector<BenchRow> rows;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        f.push_back(line.substr(start));
        break;
      }
      f.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (f.size() != 10) {
      throw ParseError("csv: expected 10 fields, got " +
                       std::to_string(f.size()));
    }
    BenchRow r;
    r.p = parse_ll(f[0]);
    r.m = static_cast<int>(parse_ll(f[1]));
    r.n = static_cast<int>(parse_ll(f[2]));
    r.seed = parse_ull(f[3]);
    r.set_size = static_cast<int>(parse_ll(f[4]));
    r.max_len = parse_ull(f[5]);
    r.mean_len = parse_double(f[6]);
    r.diameter = parse_ll(f[7]);
    r.group_order_log2 = parse_double(f[8]);
    r.slope_ref = parse_double(f[9]);
    rows.push_back(r);
  }
  return rows;
}

double log2_int(const Int& v) {
  if (v <= 0) throw Error("log2_int: positive input required");
  unsigned bits = boost::multiprecision::msb(v);  // floor(log2 v)
  if (bits <= 52) return std::log2(v.convert_to<double>());
  Int top = v >> (bits - 52);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 52);
}

}  // namespace slword
