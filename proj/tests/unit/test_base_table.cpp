#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "slword/base_table.hpp"
#include "slword/rng.hpp"
#include "slword/synthesizer.hpp"

using namespace slword;

namespace {

GeneratingSet standard_set(std::int64_t p, int m, int n) {
  GroupSpec spec = GroupSpec::make(p, m, n);
  ZpRing r = spec.ring();
  if (m == 2) {
    return GeneratingSet(spec, {ModMatrix::from_rows(r, {{1, 1}, {0, 1}}),
                                ModMatrix::from_rows(r, {{1, 0}, {1, 1}})});
  }
  REQUIRE(m == 3);
  return GeneratingSet(
      spec, {ModMatrix::from_rows(r, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}),
             ModMatrix::from_rows(r, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})});
}

}  // namespace

TEST_CASE("full table enumerates the whole group") {
  GeneratingSet S = standard_set(3, 2, 2);
  BaseTable t = BaseTable::build(S, SynthConfig{});
  CHECK(t.mode() == TableMode::Full);
  CHECK(t.level() == 2);
  CHECK(t.entries() == 648);

  ZpRing r = S.spec().ring();
  CHECK(t.word_for(ModMatrix::identity(r, 2)).empty());
  CHECK(t.word_for(S.gen(0)) == Word::parse("1"));
  CHECK(t.word_for(S.gen(1)) == Word::parse("2"));
  CHECK(t.word_for(S.gen_inverse(0)) == Word::parse("-1"));

  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    ModMatrix g = rng.sl_element(S.spec());
    Word w = t.word_for(g);
    CHECK(evaluate(w, S, 2) == g);
  }
}

TEST_CASE("full table words are shortest and deterministic") {
  GeneratingSet S = standard_set(3, 2, 2);
  BaseTable a = BaseTable::build(S, SynthConfig{});
  BaseTable b = BaseTable::build(S, SynthConfig{});
  Rng rng(18);
  for (int i = 0; i < 15; ++i) {
    ModMatrix g = rng.sl_element(S.spec());
    CHECK(a.word_for(g) == b.word_for(g));
  }
  // BFS gives geodesics: no shorter word reaches [[1,3],[0,1]] than the
  // table's, checked against the full distance map implicitly by length 3
  // in the standard set (a^3 projects to it).
  ZpRing r = S.spec().ring();
  ModMatrix g = ModMatrix::from_rows(r, {{1, 3}, {0, 1}});
  CHECK(a.word_for(g).size() == 3);
}

TEST_CASE("word_level serves depth-one classes in full mode") {
  GeneratingSet S = standard_set(3, 2, 3);
  SynthConfig cfg;
  cfg.n0 = 2;
  BaseTable t = BaseTable::build(S, cfg);
  REQUIRE(t.mode() == TableMode::Full);
  CHECK(t.level() == 3);

  Rng rng(19);
  for (int ell = 1; ell <= 2; ++ell) {
    ZpRing small = ZpRing::make(3, ell + 1);
    for (int i = 0; i < 10; ++i) {
      ModMatrix delta = rng.congruent_identity(small, 2, ell);
      Word w = t.word_level(delta, ell);
      CHECK(evaluate(w, S, ell + 1) == delta);
    }
  }
  ModMatrix id = ModMatrix::identity(ZpRing::make(3, 2), 2);
  CHECK(t.word_level(id, 1).empty());
}

TEST_CASE("coset table covers level-0 and level-1 classes") {
  GeneratingSet S = standard_set(3, 2, 3);
  SynthConfig cfg;
  cfg.memory_budget = 500;  // |G_2| = 648 will not fit, |G_1| = 24 does
  cfg.forward_cap = 400;
  BaseTable t = BaseTable::build(S, cfg);
  CHECK(t.mode() == TableMode::Cosets);
  CHECK(t.level() == 2);
  CHECK(t.entries() == 24 + 27);

  Rng rng(20);
  for (int i = 0; i < 20; ++i) {
    ModMatrix g = rng.sl_element(GroupSpec::make(3, 2, 1));
    Word w = t.word_level0(g);
    CHECK(evaluate(w, S, 1) == g);
  }
  ZpRing r2 = ZpRing::make(3, 2);
  for (int i = 0; i < 20; ++i) {
    ModMatrix delta = rng.congruent_identity(r2, 2, 1);
    Word w = t.word_level(delta, 1);
    CHECK(evaluate(w, S, 2) == delta);
  }
}

TEST_CASE("coset and full tables agree on what words mean") {
  GeneratingSet S = standard_set(3, 3, 2);
  SynthConfig small;
  small.memory_budget = 200'000;  // |SL_3(Z/9)| = 36.8M forces cosets
  BaseTable cosets = BaseTable::build(S, small);
  CHECK(cosets.mode() == TableMode::Cosets);
  CHECK(cosets.entries() == 5616 + 6561);

  Rng rng(21);
  ZpRing r2 = S.spec().ring();
  for (int i = 0; i < 10; ++i) {
    ModMatrix delta = rng.congruent_identity(r2, 3, 1);
    CHECK(evaluate(cosets.word_level(delta, 1), S, 2) == delta);
  }
}

TEST_CASE("non-generating sets are detected") {
  GroupSpec spec = GroupSpec::make(3, 2, 1);
  ZpRing r = spec.ring();
  GeneratingSet identity_only(
      spec, {ModMatrix::identity(r, 2)});
  CHECK_THROWS_AS(BaseTable::build(identity_only, SynthConfig{}),
                  NotGenerating);

  GeneratingSet unitriangular(
      spec, {ModMatrix::from_rows(r, {{1, 1}, {0, 1}})});
  CHECK_THROWS_AS(BaseTable::build(unitriangular, SynthConfig{}),
                  NotGenerating);
}

TEST_CASE("budgets below the residue group size are refused") {
  GeneratingSet S = standard_set(3, 2, 3);
  SynthConfig cfg;
  cfg.memory_budget = 10;
  CHECK_THROWS_AS(BaseTable::build(S, cfg), TooLarge);
}

TEST_CASE("save and load round trip") {
  GeneratingSet S = standard_set(3, 2, 2);
  BaseTable t = BaseTable::build(S, SynthConfig{});
  std::stringstream buf;
  t.save(buf);
  std::string bytes = buf.str();
  CHECK(bytes.substr(0, 5) == "SWBT1");

  std::stringstream in(bytes);
  BaseTable loaded = BaseTable::load(in, S);
  CHECK(loaded.mode() == TableMode::Full);
  CHECK(loaded.entries() == t.entries());
  Rng rng(22);
  for (int i = 0; i < 10; ++i) {
    ModMatrix g = rng.sl_element(S.spec());
    CHECK(loaded.word_for(g) == t.word_for(g));
  }

  std::stringstream out2;
  loaded.save(out2);
  CHECK(out2.str() == bytes);
}

TEST_CASE("coset tables also round trip through disk format") {
  GeneratingSet S = standard_set(3, 2, 4);
  SynthConfig cfg;
  cfg.memory_budget = 500;
  BaseTable t = BaseTable::build(S, cfg);
  REQUIRE(t.mode() == TableMode::Cosets);
  std::stringstream buf;
  t.save(buf);
  std::stringstream in(buf.str());
  BaseTable loaded = BaseTable::load(in, S);
  CHECK(loaded.entries() == t.entries());
  Rng rng(23);
  ZpRing r2 = ZpRing::make(3, 2);
  for (int i = 0; i < 10; ++i) {
    ModMatrix delta = rng.congruent_identity(r2, 2, 1);
    CHECK(loaded.word_level(delta, 1) == t.word_level(delta, 1));
  }
}

TEST_CASE("corrupted tables are rejected on load") {
  GeneratingSet S = standard_set(3, 2, 2);
  BaseTable t = BaseTable::build(S, SynthConfig{});
  std::stringstream buf;
  t.save(buf);
  std::string bytes = buf.str();

  // Bad magic.
  {
    std::string c = bytes;
    c[0] = 'X';
    std::stringstream in(c);
    CHECK_THROWS_AS(BaseTable::load(in, S), ParseError);
  }
  // A flipped byte mid-stream breaks either an element encoding or a
  // parent edge; the reverify catches both.
  {
    std::string c = bytes;
    c[c.size() / 2] ^= 0x01;
    std::stringstream in(c);
    CHECK_THROWS_AS(BaseTable::load(in, S), ParseError);
  }
  // Truncation.
  {
    std::string c = bytes.substr(0, bytes.size() - 7);
    std::stringstream in(c);
    CHECK_THROWS_AS(BaseTable::load(in, S), ParseError);
  }
  // A table from a different generating set never verifies.
  {
    GroupSpec spec = S.spec();
    ZpRing r = spec.ring();
    GeneratingSet other(
        spec, {ModMatrix::from_rows(r, {{1, 2}, {0, 1}}),
               ModMatrix::from_rows(r, {{1, 0}, {1, 1}})});
    std::stringstream in(bytes);
    CHECK_THROWS_AS(BaseTable::load(in, other), ParseError);
  }
}

TEST_CASE("cache files are created, reused, and survive corruption") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "slword_bt_cache_test";
  fs::remove_all(dir);
  fs::create_directories(dir);

  GeneratingSet S = standard_set(3, 2, 2);
  SynthConfig cfg;
  cfg.cache_dir = dir.string();

  Synthesizer first(S, cfg);
  fs::path file = dir / BaseTable::cache_filename(S, cfg.n0);
  CHECK(fs::exists(file));

  // Second build loads the cache; the words must be identical.
  Synthesizer second(S, cfg);
  Rng rng(24);
  for (int i = 0; i < 5; ++i) {
    ModMatrix g = rng.sl_element(S.spec());
    CHECK(first.synthesize(g) == second.synthesize(g));
  }

  // Corrupt the cache: construction must fall back to a rebuild.
  {
    std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(9);
    f.put('\xff');
  }
  Synthesizer third(S, cfg);
  for (int i = 0; i < 3; ++i) {
    ModMatrix g = rng.sl_element(S.spec());
    CHECK(first.synthesize(g) == third.synthesize(g));
  }
  fs::remove_all(dir);
}
