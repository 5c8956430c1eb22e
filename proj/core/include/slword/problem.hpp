#ifndef SLWORD_PROBLEM_HPP
#define SLWORD_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "slword/words.hpp"

namespace slword {

/**
 * A problem instance as read from disk:
 *
 *   {
 *     "p": 3, "m": 2, "n": 4,
 *     "generators": [[[1,1],[0,1]], [[1,0],[1,1]]],
 *     "target": [[..]]              // optional
 *   }
 *
 * Entries are integers, reduced mod p^n on load.  Every generator (and
 * the target, if present) must have determinant 1; anything malformed or
 * outside the supported family (p = 2, p < m, n < 1, ragged matrices)
 * throws ParseError.
 */
struct Problem {
  GroupSpec spec;
  std::vector<ModMatrix> generators;
  std::optional<ModMatrix> target;

  GeneratingSet generating_set() const {
    return GeneratingSet(spec, generators);
  }
};

Problem parse_problem(const std::string& json_text);
Problem load_problem(const std::string& path);

// Matrix literal in the same nested-list syntax, e.g. "[[1,0],[0,1]]".
ModMatrix parse_matrix_text(const std::string& text, const GroupSpec& spec);

}  // namespace slword

#endif
