#ifndef SLWORD_SEARCH_INTERNAL_HPP
#define SLWORD_SEARCH_INTERNAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "slword/packed.hpp"
#include "slword/words.hpp"

// Breadth-first machinery shared by the base table and the diameter lab.
// Expansion order is fixed: edges 0, 1, 2, ... map to letters +1, -1, +2,
// -2, ..., and the queue is FIFO, so the first path found to any node is
// the shortest word that is lexicographically least under that letter
// order.  Everything here is deterministic.

namespace slword::detail {

inline Letter letter_of_edge(int e) {
  return e % 2 == 0 ? e / 2 + 1 : -(e / 2 + 1);
}

struct StepImages {
  packed::Engine eng;
  // fwd[e] is the image of letter_of_edge(e); the image of its inverse is
  // fwd[e ^ 1].
  std::vector<packed::Engine::Mat> fwd;

  static StepImages make(const GeneratingSet& S, int k);
};

struct BfsTree {
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<std::string> key_of;
  std::vector<std::uint32_t> parent;   // parent[0] is unused
  std::vector<std::int16_t> via;       // edge taken into the node; -1 at root
  std::vector<std::uint32_t> dist;
  bool complete = false;               // frontier drained before the cap
};

// Ball around the identity, at most cap nodes.
BfsTree forward_ball(const StepImages& steps, std::uint64_t cap);

Word word_of(const BfsTree& tree, std::uint32_t id);

// Searches backward from target through inverse steps until it meets the
// ball, returning a word that evaluates to target; nullopt if cap nodes
// were exhausted first.
std::optional<Word> backward_connect(const StepImages& steps,
                                     const BfsTree& ball,
                                     const packed::Engine::Mat& target,
                                     std::uint64_t cap);

}  // namespace slword::detail

#endif
