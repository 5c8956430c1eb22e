#include <doctest.h>

#include <vector>

#include "slword/rng.hpp"
#include "slword/words.hpp"

using namespace slword;

namespace {

GeneratingSet standard_set(std::int64_t p, int n) {
  GroupSpec spec = GroupSpec::make(p, 2, n);
  ZpRing r = spec.ring();
  return GeneratingSet(spec, {ModMatrix::from_rows(r, {{1, 1}, {0, 1}}),
                              ModMatrix::from_rows(r, {{1, 0}, {1, 1}})});
}

Word random_word(Rng& rng, int num_gens, int len) {
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i) {
    int g = static_cast<int>(rng.below(num_gens)) + 1;
    ls.push_back(rng.below(2) ? g : -g);
  }
  return Word(std::move(ls));
}

}  // namespace

TEST_CASE("word parse and format round trip") {
  for (const char* text : {"1", "1,-2,1,1", "-3", ""}) {
    Word w = Word::parse(text);
    CHECK(w.format() == text);
    CHECK(Word::parse(w.format()) == w);
  }
  CHECK(Word::parse("").empty());
  CHECK(Word::parse("12,-7").letters == std::vector<Letter>{12, -7});
}

TEST_CASE("word parse rejects malformed input") {
  for (const char* text : {"0", "1,0", "1,,2", "1,-2,", ",1", "a", "1 2",
                           "1.5", "--2", "99999999999999999999"}) {
    CHECK_THROWS_AS(Word::parse(text), ParseError);
  }
}

TEST_CASE("free reduction cancels adjacent inverse pairs") {
  CHECK(Word::parse("1,-1").reduced().empty());
  CHECK(Word::parse("1,2,-2,-1").reduced().empty());
  CHECK(Word::parse("1,2,-2,3").reduced() == Word::parse("1,3"));
  CHECK(Word::parse("1,2,3").reduced() == Word::parse("1,2,3"));
  CHECK(Word::parse("-2,2,-2").reduced() == Word::parse("-2"));
  CHECK(Word::concat(Word::parse("1,2"), Word::parse("-2,-1"))
            .reduced()
            .empty());
}

TEST_CASE("inverse and commutator shapes") {
  Word u = Word::parse("1,-2,1");
  CHECK(u.inverse() == Word::parse("-1,2,-1"));
  Word v = Word::parse("2");
  Word c = Word::commutator(u, v);
  CHECK(c.size() == 2 * (u.size() + v.size()));
  CHECK(c == Word::parse("-1,2,-1,-2,1,-2,1,2"));
}

TEST_CASE("generating set validation") {
  GroupSpec spec = GroupSpec::make(3, 2, 2);
  ZpRing r = spec.ring();
  ModMatrix ok = ModMatrix::from_rows(r, {{1, 1}, {0, 1}});
  ModMatrix bad = ModMatrix::from_rows(r, {{1, 1}, {0, 2}});
  CHECK_THROWS_AS(GeneratingSet(spec, {}), InvalidGroupSpec);
  CHECK_THROWS_AS(GeneratingSet(spec, {ok, bad}), InvalidGroupSpec);
  ModMatrix wrong_ring = ModMatrix::identity(ZpRing::make(3, 3), 2);
  CHECK_THROWS_AS(GeneratingSet(spec, {wrong_ring}), InvalidGroupSpec);

  GeneratingSet S(spec, {ok});
  CHECK(S.size() == 1);
  CHECK(S.letter_image(1) == ok);
  CHECK(S.letter_image(-1) == ok.inverse());
  CHECK_THROWS_AS(S.letter_image(2), Error);
  CHECK_THROWS_AS(S.letter_image(0), Error);
}

TEST_CASE("evaluation folds letter images") {
  GeneratingSet S = standard_set(3, 3);
  const ModMatrix& a = S.gen(0);
  const ModMatrix& b = S.gen(1);
  CHECK(evaluate(Word{}, S, 3) == ModMatrix::identity(S.spec().ring(), 2));
  CHECK(evaluate(Word::parse("1,2"), S, 3) == a * b);
  CHECK(evaluate(Word::parse("-1"), S, 3) == a.inverse());
  CHECK(evaluate(Word::parse("1,2,-1"), S, 3) == a * b * a.inverse());
  // Lower exponents are projections.
  CHECK(evaluate(Word::parse("1,2"), S, 1) == (a * b).project(1));
}

TEST_CASE("packed and exact evaluation agree") {
  // 3^19 fits the packed engine, 3^21 does not; both sides of the split
  // must produce identical residues.
  GeneratingSet S = standard_set(3, 21);
  Rng rng(404);
  for (int t = 0; t < 10; ++t) {
    Word w = random_word(rng, S.size(), 60);
    for (int k : {1, 5, 19, 20, 21}) {
      ModMatrix fast = evaluate(w, S, k);
      ModMatrix exact = evaluate_exact(w, S, k);
      CHECK(fast == exact);
    }
  }
}

TEST_CASE("evaluation rejects out-of-range exponents") {
  GeneratingSet S = standard_set(3, 3);
  Word w = Word::parse("1");
  CHECK_THROWS_AS(evaluate(w, S, 0), Error);
  CHECK_THROWS_AS(evaluate(w, S, 4), Error);
}
