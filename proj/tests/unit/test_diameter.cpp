#include <doctest.h>

#include <cmath>
#include <deque>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "slword/diameter.hpp"
#include "slword/rng.hpp"
#include "slword/synthesizer.hpp"

using namespace slword;

namespace {

GeneratingSet standard_set(std::int64_t p, int n) {
  GroupSpec spec = GroupSpec::make(p, 2, n);
  ZpRing r = spec.ring();
  return GeneratingSet(spec, {ModMatrix::from_rows(r, {{1, 1}, {0, 1}}),
                              ModMatrix::from_rows(r, {{1, 0}, {1, 1}})});
}

// Plain breadth-first search over exact matrices keyed by their printed
// form; shares nothing with the library's packed BFS.
std::map<std::string, int> bfs_oracle(const GeneratingSet& S) {
  std::vector<ModMatrix> steps;
  for (int i = 0; i < S.size(); ++i) {
    steps.push_back(S.gen(i));
    steps.push_back(S.gen_inverse(i));
  }
  std::map<std::string, int> dist;
  std::deque<ModMatrix> queue;
  ModMatrix id = ModMatrix::identity(S.spec().ring(), S.spec().m);
  dist[id.to_string()] = 0;
  queue.push_back(id);
  while (!queue.empty()) {
    ModMatrix g = queue.front();
    queue.pop_front();
    int d = dist[g.to_string()];
    for (const ModMatrix& s : steps) {
      ModMatrix h = g * s;
      auto [it, fresh] = dist.emplace(h.to_string(), d + 1);
      if (fresh) queue.push_back(h);
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("exact distances match a plain BFS") {
  for (int n : {1, 2}) {
    GeneratingSet S = standard_set(3, n);
    DistanceMap dm = exact_distances(S, 1'000'000);
    std::map<std::string, int> oracle = bfs_oracle(S);
    CHECK(dm.count() == oracle.size());
    CHECK(dm.count() == group_order(3, 2, n));

    int worst = 0;
    for (const auto& [key, d] : oracle) worst = std::max(worst, d);
    CHECK(dm.diameter() == worst);

    Rng rng(41);
    for (int t = 0; t < 50; ++t) {
      ModMatrix g = rng.sl_element(S.spec());
      CHECK(dm.distance(g) == oracle.at(g.to_string()));
    }
  }
}

TEST_CASE("random generating sets agree with the oracle too") {
  GroupSpec spec = GroupSpec::make(3, 2, 2);
  int done = 0;
  for (std::uint64_t seed = 0; done < 5; ++seed) {
    Rng rng(mix_seed(42, seed));
    std::vector<ModMatrix> gens = {rng.sl_element(spec),
                                   rng.sl_element(spec)};
    GeneratingSet S(spec, gens);
    try {
      DistanceMap dm = exact_distances(S, 1'000'000);
      std::map<std::string, int> oracle = bfs_oracle(S);
      CHECK(dm.count() == oracle.size());
      int worst = 0;
      for (const auto& [key, d] : oracle) worst = std::max(worst, d);
      CHECK(dm.diameter() == worst);
      ++done;
    } catch (const NotGenerating&) {
      // skip non-generating samples
    }
  }
}

TEST_CASE("synthesized words are never shorter than the distance") {
  GeneratingSet S = standard_set(3, 2);
  DistanceMap dm = exact_distances(S, 1'000'000);
  Synthesizer synth(S);
  Rng rng(43);
  for (int t = 0; t < 30; ++t) {
    ModMatrix g = rng.sl_element(S.spec());
    Word w = synth.synthesize(g);
    CHECK(w.size() >= static_cast<std::size_t>(dm.distance(g)));
  }
}

TEST_CASE("diameter refuses oversized groups and bad sets") {
  GeneratingSet S = standard_set(3, 6);
  CHECK_THROWS_AS(exact_distances(S, 1000), TooLarge);
  GroupSpec spec = GroupSpec::make(3, 2, 1);
  GeneratingSet bad(spec,
                    {ModMatrix::identity(spec.ring(), 2)});
  CHECK_THROWS_AS(exact_distances(bad, 1'000'000), NotGenerating);
}

TEST_CASE("worst case sampling keeps the largest diameter") {
  GroupSpec spec = GroupSpec::make(3, 2, 1);
  WorstCaseResult res = worst_case_sample(spec, 6, 2, 99, 1'000'000);
  CHECK(res.sets_examined == 6);
  CHECK(res.diameter >= 1);
  GeneratingSet S(spec, res.generators);
  CHECK(exact_diameter(S, 1'000'000) == res.diameter);
}

TEST_CASE("CSV emission and parsing round trip") {
  std::vector<BenchRow> rows = {
      {3, 2, 4, 77, 2, 123, 45.5, 9, 18.849, 3.0},
      {5, 3, 2, 78, 3, 456, 200.25, -1, 55.0, 4.0},
  };
  std::ostringstream os;
  emit_csv(os, rows);
  std::string text = os.str();
  CHECK(text.substr(0, text.find('\n')) ==
        "p,m,n,seed,set_size,max_len,mean_len,diameter,group_order_log,"
        "slope_ref");

  std::istringstream is(text);
  std::vector<BenchRow> back = parse_csv(is);
  REQUIRE(back.size() == 2);
  CHECK(back[0].p == 3);
  CHECK(back[0].seed == 77);
  CHECK(back[0].max_len == 123);
  CHECK(back[0].mean_len == doctest::Approx(45.5));
  CHECK(back[0].diameter == 9);
  CHECK(back[1].diameter == -1);
  CHECK(back[1].slope_ref == doctest::Approx(4.0));

  std::istringstream bad("not,a,header\n1,2,3\n");
  CHECK_THROWS_AS(parse_csv(bad), ParseError);
  std::istringstream short_row(
      "p,m,n,seed,set_size,max_len,mean_len,diameter,group_order_log,"
      "slope_ref\n3,2,4\n");
  CHECK_THROWS_AS(parse_csv(short_row), ParseError);
}

TEST_CASE("log2 of big integers") {
  CHECK(log2_int(Int(1)) == doctest::Approx(0.0));
  CHECK(log2_int(Int(1024)) == doctest::Approx(10.0));
  Int big = 1;
  for (int i = 0; i < 100; ++i) big *= 3;
  CHECK(log2_int(big) == doctest::Approx(100.0 * std::log2(3.0)));
}

TEST_CASE("bench lengths is deterministic and fills every cell") {
  BenchParams params;
  params.p = 3;
  params.m = 2;
  params.n_lo = 2;
  params.n_hi = 4;
  params.sets_per_n = 2;
  params.targets_per_set = 3;
  params.seed = 5;
  params.diameter_budget = 20'000;

  BenchResult a = bench_lengths(params);
  BenchResult b = bench_lengths(params);
  CHECK(a.rows.size() == 6);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].seed == b.rows[i].seed);
    CHECK(a.rows[i].max_len == b.rows[i].max_len);
    CHECK(a.rows[i].mean_len == b.rows[i].mean_len);
    CHECK(a.rows[i].diameter == b.rows[i].diameter);
  }
  // n = 2 fits the diameter budget, n = 4 does not.
  CHECK(a.rows[0].diameter >= 1);
  CHECK(a.rows[5].diameter == -1);
  for (const BenchRow& row : a.rows) {
    CHECK(row.max_len >= 1);
    CHECK(row.mean_len > 0.0);
    CHECK(row.slope_ref == doctest::Approx(3.0));
  }
}
