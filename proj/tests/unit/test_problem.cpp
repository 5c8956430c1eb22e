#include <doctest.h>

#include <string>

#include "slword/problem.hpp"

using namespace slword;

namespace {

const char* kGood = R"({
  "p": 3, "m": 2, "n": 2,
  "generators": [[[1,1],[0,1]], [[1,0],[1,1]]],
  "target": [[1,4],[0,1]]
})";

}  // namespace

TEST_CASE("well-formed problems parse") {
  Problem prob = parse_problem(kGood);
  CHECK(prob.spec.p == 3);
  CHECK(prob.spec.m == 2);
  CHECK(prob.spec.n == 2);
  CHECK(prob.generators.size() == 2);
  REQUIRE(prob.target.has_value());
  CHECK(prob.target->at(0, 1) == 4);
  CHECK(prob.generating_set().size() == 2);
}

TEST_CASE("entries are reduced mod p^n") {
  Problem prob = parse_problem(R"({
    "p": 3, "m": 2, "n": 2,
    "generators": [[[10, -8], [9, 1]]]
  })");
  CHECK(prob.generators[0].at(0, 0) == 1);
  CHECK(prob.generators[0].at(0, 1) == 1);
  CHECK(prob.generators[0].at(1, 0) == 0);
  CHECK_FALSE(prob.target.has_value());
}

TEST_CASE("malformed problems are rejected") {
  auto rejects = [](const std::string& text) {
    CHECK_THROWS_AS(parse_problem(text), ParseError);
  };
  rejects("not json at all");
  rejects("{}");
  rejects(R"({"p": 3, "m": 2, "n": 2})");
  // p even, p not prime, p < m, n = 0.
  rejects(R"({"p": 2, "m": 2, "n": 2, "generators": [[[1,0],[0,1]]]})");
  rejects(R"({"p": 9, "m": 2, "n": 2, "generators": [[[1,0],[0,1]]]})");
  rejects(R"({"p": 3, "m": 4, "n": 1, "generators": [
    [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]]})");
  rejects(R"({"p": 3, "m": 2, "n": 0, "generators": [[[1,0],[0,1]]]})");
  // Ragged and non-square matrices.
  rejects(R"({"p": 3, "m": 2, "n": 2, "generators": [[[1,0,0],[0,1,0]]]})");
  rejects(R"({"p": 3, "m": 2, "n": 2, "generators": [[[1,0],[0]]]})");
  rejects(R"({"p": 3, "m": 2, "n": 2, "generators": [[[1,0]]]})");
  // Determinant != 1.
  rejects(R"({"p": 3, "m": 2, "n": 2, "generators": [[[2,0],[0,1]]]})");
  rejects(R"({"p": 3, "m": 2, "n": 2, "generators": [[[1,1],[0,1]]],
    "target": [[2,0],[0,1]]})");
  // Empty generator list, non-integer entries.
  rejects(R"({"p": 3, "m": 2, "n": 2, "generators": []})");
  rejects(R"({"p": 3, "m": 2, "n": 2, "generators": [[[1.5,0],[0,1]]]})");
  rejects(R"({"p": 3, "m": 2, "n": 2, "generators": [[["1",0],[0,1]]]})");
}

TEST_CASE("determinant is checked at the full modulus") {
  // det = 1 + 27, which is 1 mod 27 but not mod 81.
  std::string text = R"({
    "p": 3, "m": 2, "n": 4,
    "generators": [[[28, 0], [0, 1]]]
  })";
  CHECK_THROWS_AS(parse_problem(text), ParseError);
}

TEST_CASE("matrix literals parse in nested-list form") {
  GroupSpec spec = GroupSpec::make(3, 2, 2);
  ModMatrix g = parse_matrix_text("[[1, 2], [3, -4]]", spec);
  CHECK(g.at(0, 1) == 2);
  CHECK(g.at(1, 1) == 5);
  CHECK_THROWS_AS(parse_matrix_text("[[1, 2]]", spec), ParseError);
  CHECK_THROWS_AS(parse_matrix_text("nope", spec), ParseError);
}

TEST_CASE("load_problem reports missing files") {
  CHECK_THROWS_AS(load_problem("/nonexistent/path.json"), ParseError);
}
