#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slword/diameter.hpp"
#include "slword/errors.hpp"
#include "slword/lie.hpp"
#include "slword/logexp.hpp"
#include "slword/problem.hpp"
#include "slword/rng.hpp"
#include "slword/synthesizer.hpp"

namespace {

using namespace slword;

// Exit codes: 0 ok, 1 other failure (incl. resource refusal), 2 the set
// does not generate, 3 parse/validation, 4 verification mismatch.
constexpr int kExitError = 1;
constexpr int kExitNotGenerating = 2;
constexpr int kExitParse = 3;
constexpr int kExitVerify = 4;

struct CommonOpts {
  std::string problem_path;
  std::string target_text;
  int n0 = 1;
  std::uint64_t seed = 1;
  std::uint64_t budget = 10'000'000;
  std::uint64_t forward_cap = 1'000'000;
  std::string cache_dir;
  bool logexp_lift = false;
};

SynthConfig to_config(const CommonOpts& o) {
  SynthConfig cfg;
  cfg.n0 = o.n0;
  cfg.memory_budget = o.budget;
  cfg.forward_cap = o.forward_cap;
  cfg.use_logexp_lift = o.logexp_lift;
  cfg.cache_dir = o.cache_dir;
  return cfg;
}

// --target accepts an inline matrix literal or @path to a file holding one.
ModMatrix resolve_target(const Problem& prob, const std::string& flag) {
  if (!flag.empty()) {
    std::string text = flag;
    if (flag[0] == '@') {
      std::ifstream in(flag.substr(1));
      if (!in) throw ParseError("cannot open target file " + flag.substr(1));
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    ModMatrix t = parse_matrix_text(text, prob.spec);
    if (t.det() != 1) {
      throw ParseError("target: determinant is " + t.det().str() + ", not 1");
    }
    return t;
  }
  if (!prob.target) {
    throw ParseError("no target: none in problem file and no --target given");
  }
  return *prob.target;
}

int cmd_synthesize(const CommonOpts& o) {
  Problem prob = load_problem(o.problem_path);
  ModMatrix target = resolve_target(prob, o.target_text);
  GeneratingSet S = prob.generating_set();

  auto t0 = std::chrono::steady_clock::now();
  Synthesizer synth(S, to_config(o));
  auto t1 = std::chrono::steady_clock::now();
  SynthStats stats;
  Word w = synth.synthesize(target, &stats);
  auto t2 = std::chrono::steady_clock::now();

  VerifyReport rep = verify_word(target, w, S);
  if (!rep.ok) {
    std::cerr << "error: emitted word does not evaluate to the target\n";
    return kExitVerify;
  }

  auto ms = [](auto a, auto b) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
  };
  std::cout << w.format() << "\n";
  std::cout << "raw letters:     " << stats.raw_letters << "\n";
  std::cout << "reduced letters: " << stats.reduced_letters << "\n";
  std::cout << "base letters:    " << stats.base_letters << "\n";
  std::cout << "levels cleared:  ";
  for (std::size_t i = 0; i < stats.levels.size(); ++i)
    std::cout << (i ? " " : "") << stats.levels[i];
  std::cout << "\n";
  std::cout << "table:           " << (synth.table().mode() == TableMode::Full
                                           ? "full"
                                           : "cosets")
            << " at exponent " << synth.table().level() << ", "
            << synth.table().entries() << " entries, built in " << ms(t0, t1)
            << " ms\n";
  std::cout << "synthesis:       " << ms(t1, t2) << " ms\n";
  std::cout << "verified:        ok\n";
  return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& word_text) {
  Problem prob = load_problem(o.problem_path);
  ModMatrix target = resolve_target(prob, o.target_text);
  Word w = Word::parse(word_text);
  VerifyReport rep = verify_word(target, w, prob.generating_set());
  std::cout << "word letters:    " << rep.raw_letters << " raw, "
            << rep.reduced_letters << " reduced\n";
  if (!rep.ok) {
    std::cout << "mismatch: word evaluates to " << rep.actual.to_string()
              << "\n";
    return kExitVerify;
  }
  std::cout << "verified:        ok\n";
  return 0;
}

int cmd_diameter(const CommonOpts& o) {
  Problem prob = load_problem(o.problem_path);
  GeneratingSet S = prob.generating_set();
  auto t0 = std::chrono::steady_clock::now();
  DistanceMap dm = exact_distances(S, o.budget);
  auto t1 = std::chrono::steady_clock::now();
  std::cout << "group:           SL_" << prob.spec.m << "(Z/" << prob.spec.p
            << "^" << prob.spec.n << ")\n";
  std::cout << "elements:        " << dm.count() << "\n";
  std::cout << "diameter:        " << dm.diameter() << "\n";
  std::cout << "bfs time:        "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                   .count()
            << " ms\n";
  return 0;
}

struct BenchOpts {
  std::int64_t p = 3;
  int m = 2;
  std::string n_range = "2:8";
  int trials = 10;
  int sets = 3;
  int set_size = 2;
  std::string out;
  std::uint64_t diameter_budget = 0;
};

int cmd_bench(const BenchOpts& b, const CommonOpts& o) {
  int lo = 0, hi = 0;
  if (std::sscanf(b.n_range.c_str(), "%d:%d", &lo, &hi) != 2 || lo < 1 ||
      hi < lo) {
    throw ParseError("bad --n-range, expected LO:HI with 1 <= LO <= HI");
  }

  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!b.out.empty() && b.out != "-") {
    file.open(b.out);
    if (!file) throw Error("cannot open " + b.out + " for writing");
    os = &file;
  }

  if (b.trials == 0) {
    emit_csv(*os, {});
    return 0;
  }

  BenchParams params;
  params.p = b.p;
  params.m = b.m;
  params.n_lo = lo;
  params.n_hi = hi;
  params.sets_per_n = b.sets;
  params.targets_per_set = b.trials;
  params.set_size = b.set_size;
  params.seed = o.seed;
  params.synth = to_config(o);
  params.diameter_budget = b.diameter_budget;

  BenchResult res = bench_lengths(params);
  emit_csv(*os, res.rows);
  std::ostream& info = (os == &std::cout) ? std::cerr : std::cout;
  info << "rows:            " << res.rows.size() << "\n";
  info << "fit window:      n in [" << res.fit_lo << ", " << res.fit_hi
       << "]\n";
  info << "fitted exponent: " << res.fitted_exponent << " (reference "
       << (b.m == 2 ? 3.0 : 4.0) << ")\n";
  return 0;
}

class Selftest {
 public:
  explicit Selftest(bool full, std::uint64_t seed) : full_(full), seed_(seed) {}

  int run() {
    bracket_solver_sl2();
    two_bracket_solver();
    polynomial_identities();
    diagrams();
    round_trips();
    std::cout << "selftest: " << passed_ << "/" << total_ << " suites passed"
              << (full_ ? " (full)" : " (quick)") << "\n";
    return passed_ == total_ ? 0 : kExitError;
  }

 private:
  void report(const std::string& name, int checked, int failures) {
    ++total_;
    if (failures == 0) ++passed_;
    std::cout << (failures == 0 ? "[PASS] " : "[FAIL] ") << name << " ("
              << checked << " checked, " << failures << " failures)\n";
  }

  void bracket_solver_sl2() {
    std::vector<std::pair<std::int64_t, int>> cases = {{3, 1}, {3, 2}, {5, 1}};
    if (full_) {
      cases.push_back({3, 3});
      cases.push_back({5, 2});
      cases.push_back({7, 1});
    }
    for (auto [p, w] : cases) {
      ZpRing ring = ZpRing::make(p, w);
      Int q = ring.modulus();
      int checked = 0, failures = 0;
      for (Int u = 0; u < q; ++u)
        for (Int v = 0; v < q; ++v)
          for (Int x = 0; x < q; ++x) {
            ModMatrix a(ring, 2);
            a.set(0, 0, u);
            a.set(0, 1, v);
            a.set(1, 0, x);
            a.set(1, 1, ring.reduce(-u));
            ++checked;
            try {
              auto [a1, a2] = solve_bracket_sl2(LieElement::from(a));
              if (bracket(a1, a2).mat() != a) ++failures;
            } catch (const Error&) {
              ++failures;
            }
          }
      report("single-bracket solver exhaustive over sl_2(" + ring.describe() +
                 ")",
             checked, failures);
    }
  }

  void two_bracket_solver() {
    {
      ZpRing ring = ZpRing::make(3, 1);
      int checked = 0, failures = 0;
      // 8 free digits: the full traceless cube mod 3.
      for (int code = 0; code < 6561; ++code) {
        int digits[8];
        int c = code;
        for (int i = 0; i < 8; ++i) {
          digits[i] = c % 3;
          c /= 3;
        }
        ModMatrix a(ring, 3);
        int idx = 0;
        Int diag = 0;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            if (i == 2 && j == 2) continue;
            a.set(i, j, digits[idx++]);
            if (i == j) diag += digits[idx - 1];
          }
        a.set(2, 2, ring.reduce(-diag));
        ++checked;
        try {
          TwoBrackets tb = solve_two_brackets(LieElement::from(a));
          ModMatrix got =
              bracket(tb.b1, tb.b2).mat() + bracket(tb.b3, tb.b4).mat();
          if (got != a) ++failures;
        } catch (const Error&) {
          ++failures;
        }
      }
      report("two-bracket solver exhaustive over sl_3(Z/3)", checked,
             failures);
    }

    std::vector<std::tuple<std::int64_t, int, int>> cases = {
        {5, 3, 2}, {5, 4, 1}, {5, 5, 1}};
    if (full_) {
      cases.push_back({7, 3, 3});
      cases.push_back({7, 6, 2});
      cases.push_back({11, 4, 2});
      cases.push_back({13, 13, 1});
    }
    int per_case = full_ ? 500 : 150;
    for (auto [p, m, w] : cases) {
      ZpRing ring = ZpRing::make(p, w);
      Rng rng(mix_seed(seed_, static_cast<std::uint64_t>(p), m, w));
      int checked = 0, failures = 0;
      for (int t = 0; t < per_case; ++t) {
        LieElement a = LieElement::from(rng.traceless(ring, m));
        ++checked;
        try {
          TwoBrackets tb = solve_two_brackets(a);
          ModMatrix got =
              bracket(tb.b1, tb.b2).mat() + bracket(tb.b3, tb.b4).mat();
          if (got != a.mat()) ++failures;
        } catch (const Error&) {
          ++failures;
        }
      }
      std::ostringstream name;
      name << "two-bracket solver random over sl_" << m << "("
           << ring.describe() << ")";
      report(name.str(), checked, failures);
    }
  }

  void polynomial_identities() {
    int trials = full_ ? 2000 : 400;
    for (std::int64_t p : {3, 5}) {
      for (int w : {1, 3, 6}) {
        ZpRing ring = ZpRing::make(p, w);
        Rng rng(mix_seed(seed_, static_cast<std::uint64_t>(p), w, 17));
        int checked = 0, failures = 0;
        for (int t = 0; t < trials; ++t) {
          ModMatrix c = rng.traceless(ring, 2);
          ModMatrix d = rng.traceless(ring, 2);
          ++checked;
          if (!check_sl2_identity1(c, d) || !check_sl2_identity2(c, d))
            ++failures;
        }
        report("sl_2 bracket identities over " + ring.describe(), checked,
               failures);
      }
    }
  }

  void diagrams() {
    struct Case {
      std::int64_t p;
      int i, j, k, m;
    };
    std::vector<Case> cases = {{3, 1, 1, 1, 2}, {3, 2, 1, 1, 2},
                               {3, 2, 2, 2, 2}, {5, 1, 1, 1, 2},
                               {3, 1, 1, 1, 3}, {3, 2, 2, 1, 3}};
    if (full_) {
      cases.push_back({3, 3, 2, 2, 2});
      cases.push_back({3, 4, 4, 4, 2});
      cases.push_back({5, 3, 3, 3, 2});
      cases.push_back({7, 2, 2, 2, 3});
      cases.push_back({3, 3, 3, 3, 4});
    }
    int trials = full_ ? 200 : 40;
    for (const Case& c : cases) {
      DiagramReport rep = verify_diagram(c.p, c.i, c.j, c.k, trials,
                                         mix_seed(seed_, c.i, c.j, c.k), c.m);
      std::ostringstream name;
      name << "commutator diagram p=" << c.p << " (i,j,k)=(" << c.i << ","
           << c.j << "," << c.k << ") m=" << c.m;
      report(name.str(), rep.trials,
             rep.congruence_failures + rep.log_failures +
                 rep.invariance_failures);
    }
  }

  void round_trips() {
    int trials = full_ ? 400 : 80;
    for (std::int64_t p : {3, 5, 7}) {
      for (int m : {2, 3}) {
        int K = full_ ? 12 : 6;
        ZpRing ring = ZpRing::make(p, K);
        Rng rng(mix_seed(seed_, static_cast<std::uint64_t>(p), m, K));
        int checked = 0, failures = 0;
        for (int t = 0; t < trials; ++t) {
          // log(exp(a)) = a for v(a) >= 1.
          ModMatrix raw = rng.traceless(ring, m);
          ModMatrix scaled(ring, m);
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
              scaled.set(i, j, ring.mul(raw.at(i, j), ring.p_pow(1)));
          LieElement a = LieElement::from(scaled);
          ++checked;
          if (trunc_log(trunc_exp(a, K), K) != a) ++failures;
          // exp(log(g)) = g for g == I mod p with det 1.
          ModMatrix g = rng.congruent_identity(ring, m, 1);
          ++checked;
          if (trunc_exp(trunc_log(g, K), K) != g) ++failures;
        }
        std::ostringstream name;
        name << "log/exp round trips m=" << m << " over " << ring.describe();
        report(name.str(), checked, failures);
      }
    }
  }

  bool full_;
  std::uint64_t seed_;
  int total_ = 0;
  int passed_ = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "slword: explicit short words over arbitrary generating sets of "
      "SL_m(Z/p^n Z)"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string word_text;
  BenchOpts bench;
  bool selftest_full = false;
  bool selftest_quick = false;

  auto add_common = [&](CLI::App* sub, bool with_problem) {
    if (with_problem)
      sub->add_option("problem", opts.problem_path,
                      "problem file (see problems/ for the schema)")
          ->required();
    sub->add_option("--n0", opts.n0, "recursion floor (base table exponent "
                                     "is n0+1)");
    sub->add_option("--seed", opts.seed, "random seed");
    sub->add_option("--budget", opts.budget,
                    "largest state count for exhaustive enumeration");
    sub->add_option("--forward-cap", opts.forward_cap,
                    "initial forward ball size for coset searches");
    sub->add_option("--cache", opts.cache_dir,
                    "directory for base table caches");
    sub->add_flag("--logexp-lift", opts.logexp_lift,
                  "lift through truncated exp instead of I + p^l A");
  };

  CLI::App* synth = app.add_subcommand(
      "synthesize", "produce a verified word for the target element");
  add_common(synth, true);
  synth->add_option("--target", opts.target_text,
                    "target matrix, inline [[..],[..]] or @file");

  CLI::App* verify = app.add_subcommand(
      "verify", "check that a word evaluates to the target");
  add_common(verify, true);
  verify->add_option("--target", opts.target_text,
                     "target matrix, inline [[..],[..]] or @file");
  verify->add_option("--word", word_text, "comma-separated letters, e.g. 1,-2,1")
      ->required();

  CLI::App* diam = app.add_subcommand(
      "diameter", "exact Cayley graph diameter by breadth-first search");
  add_common(diam, true);

  CLI::App* ben = app.add_subcommand(
      "bench", "word-length growth measurement, CSV output");
  ben->add_option("--p", bench.p, "prime modulus base");
  ben->add_option("--m", bench.m, "matrix size");
  ben->add_option("--n-range", bench.n_range, "exponent range LO:HI");
  ben->add_option("--trials", bench.trials, "targets per generating set");
  ben->add_option("--sets", bench.sets, "generating sets per exponent");
  ben->add_option("--set-size", bench.set_size, "generators per set");
  ben->add_option("--out", bench.out, "CSV path ('-' or empty for stdout)");
  ben->add_option("--diameter-budget", bench.diameter_budget,
                  "compute exact diameters when |G_n| fits (0 disables)");
  add_common(ben, false);

  CLI::App* self = app.add_subcommand(
      "selftest", "run the invariant suites and print a pass/fail report");
  self->add_flag("--quick", selftest_quick, "small suites (default)");
  self->add_flag("--full", selftest_full, "larger suites, a few minutes");
  self->add_option("--seed", opts.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (app.got_subcommand(synth)) return cmd_synthesize(opts);
    if (app.got_subcommand(verify)) return cmd_verify(opts, word_text);
    if (app.got_subcommand(diam)) return cmd_diameter(opts);
    if (app.got_subcommand(ben)) return cmd_bench(bench, opts);
    if (app.got_subcommand(self))
      return Selftest(selftest_full && !selftest_quick, opts.seed).run();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidGroupSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NotGenerating& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotGenerating;
  } catch (const VerifyFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
