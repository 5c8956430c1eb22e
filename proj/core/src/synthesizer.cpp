#include "slword/synthesizer.hpp"

#include <filesystem>

#include "slword/lie.hpp"
#include "slword/logexp.hpp"

namespace slword {

namespace {

// At most this many records are written back to the cache; larger tables
// rebuild faster than they verify from disk.
constexpr std::uint64_t kCacheRecordCap = 1'000'000;

BaseTable make_table(const GeneratingSet& S, const SynthConfig& cfg) {
  if (cfg.cache_dir.empty()) return BaseTable::build(S, cfg);
  namespace fs = std::filesystem;
  fs::path path = fs::path(cfg.cache_dir) / BaseTable::cache_filename(S, cfg.n0);
  std::error_code ec;
  if (fs::exists(path, ec)) {
    try {
      return BaseTable::load_file(path.string(), S);
    } catch (const ParseError&) {
      // stale or corrupt cache; rebuild below
    }
  }
  BaseTable table = BaseTable::build(S, cfg);
  if (table.entries() <= kCacheRecordCap) {
    try {
      fs::create_directories(cfg.cache_dir, ec);
      table.save_file(path.string());
    } catch (const Error&) {
      // caching is best effort
    }
  }
  return table;
}

}  // namespace

Synthesizer::Synthesizer(GeneratingSet S, SynthConfig cfg)
    : S_(std::move(S)), cfg_(std::move(cfg)), table_(make_table(S_, cfg_)) {}

Synthesizer::Synthesizer(GeneratingSet S, SynthConfig cfg, BaseTable table)
    : S_(std::move(S)), cfg_(std::move(cfg)), table_(std::move(table)) {}

ModMatrix Synthesizer::depth_one_lift(const ModMatrix& a_mod_p,
                                      int lev) const {
  const GroupSpec& spec = S_.spec();
  ZpRing ring = spec.ring_at(lev + 1);
  if (cfg_.use_logexp_lift) {
    // The naive lift is traceless only mod p; recompute the last diagonal
    // slot so exp gets an exact sl element.  Both lifts agree mod p.
    ModMatrix ahat = a_mod_p.lift(lev + 1);
    Int s = 0;
    for (int i = 0; i + 1 < spec.m; ++i) s += ahat.at(i, i);
    ahat.set(spec.m - 1, spec.m - 1, ring.neg(s));
    return trunc_exp(LieElement::from(ahat.scaled(ring.p_pow(lev))),
                     lev + 1);
  }
  ModMatrix g = ModMatrix::identity(ring, spec.m);
  Int pl = ring.p_pow(lev);
  for (int i = 0; i < spec.m; ++i)
    for (int j = 0; j < spec.m; ++j)
      g.set(i, j, g.at(i, j) + pl * a_mod_p.at(i, j));
  return g;
}

Word Synthesizer::realize_level(const ModMatrix& delta, int ell,
                                RealizeTrace* trace) const {
  const GroupSpec& spec = S_.spec();
  if (ell < 1 || ell > spec.n - 1) {
    throw Error("realize_level: level " + std::to_string(ell) +
                " outside [1, " + std::to_string(spec.n - 1) + "]");
  }
  if (delta.m() != spec.m || delta.ring().p() != spec.p ||
      delta.ring().w() != ell + 1) {
    throw Error("realize_level: element is not at exponent l+1");
  }
  if (delta.det() != 1) throw Error("realize_level: determinant is not 1");
  if (delta.congruence_level() < ell) {
    throw Error("realize_level: element is not in the level-" +
                std::to_string(ell) + " kernel");
  }
  Word w = realize_inner(delta, ell, trace);
  if (evaluate(w, S_, ell + 1) != delta) {
    throw VerifyFailure("realize_level: word for level " +
                        std::to_string(ell) + " failed re-evaluation");
  }
  return w;
}

Word Synthesizer::realize_inner(const ModMatrix& delta, int ell,
                                RealizeTrace* trace) const {
  if (trace) trace->level = ell;
  if (delta.is_identity()) return Word{};
  if (ell <= table_.n0()) {
    Word w = table_.word_level(delta, ell);
    if (trace) trace->raw_len = w.size();
    return w;
  }

  const GroupSpec& spec = S_.spec();
  int k = ell / 2;
  int mm = ell - k;

  // Direction of the class: delta = I + p^l A with A traceless mod p.
  ZpRing modp = spec.ring_at(1);
  ModMatrix a(modp, spec.m);
  for (int i = 0; i < spec.m; ++i) {
    for (int j = 0; j < spec.m; ++j) {
      Int d = delta.ring().sub(delta.at(i, j), i == j ? 1 : 0);
      a.set(i, j, delta.ring().divide_exact(d, ell));
    }
  }
  LieElement dir = LieElement::from(a);

  if (trace) trace->children.reserve(4);
  auto realized_commutator = [&](const LieElement& x, const LieElement& y) {
    ModMatrix g1 = depth_one_lift(x.mat(), mm);
    ModMatrix g2 = depth_one_lift(y.mat(), k);
    RealizeTrace* c1 = nullptr;
    RealizeTrace* c2 = nullptr;
    if (trace) {
      trace->children.emplace_back();
      trace->children.emplace_back();
      c1 = &trace->children[trace->children.size() - 2];
      c2 = &trace->children[trace->children.size() - 1];
    }
    Word w1 = realize_level(g1, mm, c1);
    Word w2 = realize_level(g2, k, c2);
    // A trivial side makes the whole commutator trivial; emitting it would
    // only pad the word.
    if (w1.empty() || w2.empty()) return Word{};
    return Word::commutator(w1, w2);
  };

  Word w;
  if (spec.m == 2) {
    auto [a1, a2] = solve_bracket_sl2(dir);
    w = realized_commutator(a1, a2);
  } else {
    TwoBrackets tb = solve_two_brackets(dir);
    Word first = realized_commutator(tb.b1, tb.b2);
    Word second = realized_commutator(tb.b3, tb.b4);
    w = Word::concat(first, second);
  }
  if (trace) trace->raw_len = w.size();
  return w;
}

Word Synthesizer::synthesize(const ModMatrix& target,
                             SynthStats* stats) const {
  const GroupSpec& spec = S_.spec();
  if (target.m() != spec.m || target.ring() != spec.ring()) {
    throw Error("synthesize: target is not at the group's exponent");
  }
  if (target.det() != 1) {
    throw Error("synthesize: target determinant is not 1");
  }
  if (stats) *stats = SynthStats{};

  Word w = table_.mode() == TableMode::Full
               ? table_.word_for(target.ring().w() == table_.level()
                                     ? target
                                     : target.project(table_.level()))
               : table_.word_level0(target.project(1));
  if (stats) stats->base_letters = w.size();

  ModMatrix delta = evaluate(w, S_, spec.n).inverse() * target;
  int prev = -1;
  for (;;) {
    int ell = delta.congruence_level();
    if (ell >= spec.n) break;
    if (ell <= prev) {
      throw Error("synthesize: residual level did not increase");
    }
    prev = ell;
    if (stats) stats->levels.push_back(ell);
    Word wl = realize_level(delta.project(ell + 1), ell);
    w = Word::concat(w, wl);
    delta = evaluate(wl, S_, spec.n).inverse() * delta;
  }

  std::size_t raw = w.size();
  w = w.reduced();
  if (evaluate(w, S_, spec.n) != target) {
    throw VerifyFailure("synthesize: final word failed re-evaluation");
  }
  if (stats) {
    stats->raw_letters = raw;
    stats->reduced_letters = w.size();
  }
  return w;
}

VerifyReport verify_word(const ModMatrix& target, const Word& w,
                         const GeneratingSet& S) {
  ModMatrix actual = evaluate(w, S, S.spec().n);
  return VerifyReport{actual == target, w.size(), w.reduced().size(),
                      std::move(actual)};
}

}  // namespace slword
