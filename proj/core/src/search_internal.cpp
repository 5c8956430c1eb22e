#include "search_internal.hpp"

#include <algorithm>
#include <deque>

namespace slword::detail {

StepImages StepImages::make(const GeneratingSet& S, int k) {
  packed::Engine eng = packed::Engine::make(S.spec().p, k, S.spec().m);
  std::vector<packed::Engine::Mat> fwd;
  fwd.reserve(static_cast<std::size_t>(2) * S.size());
  for (int e = 0; e < 2 * S.size(); ++e) {
    fwd.push_back(eng.from_mod(S.letter_image(letter_of_edge(e)).project(k)));
  }
  return StepImages{std::move(eng), std::move(fwd)};
}

BfsTree forward_ball(const StepImages& steps, std::uint64_t cap) {
  const packed::Engine& eng = steps.eng;
  BfsTree tree;
  packed::Engine::Mat ident = eng.identity();
  std::string ikey = eng.encode_bytes(ident);
  tree.index.emplace(ikey, 0);
  tree.key_of.push_back(ikey);
  tree.parent.push_back(0);
  tree.via.push_back(-1);
  tree.dist.push_back(0);

  std::deque<std::uint32_t> queue{0};
  packed::Engine::Mat child(ident.size());
  while (!queue.empty()) {
    std::uint32_t id = queue.front();
    queue.pop_front();
    packed::Engine::Mat cur = eng.decode_bytes(tree.key_of[id]);
    for (int e = 0; e < static_cast<int>(steps.fwd.size()); ++e) {
      eng.mul(child, cur, steps.fwd[e]);
      std::string key = eng.encode_bytes(child);
      std::uint32_t nid = static_cast<std::uint32_t>(tree.key_of.size());
      auto [it, inserted] = tree.index.emplace(std::move(key), nid);
      if (!inserted) continue;
      tree.key_of.push_back(it->first);
      tree.parent.push_back(id);
      tree.via.push_back(static_cast<std::int16_t>(e));
      tree.dist.push_back(tree.dist[id] + 1);
      if (tree.key_of.size() >= cap) return tree;  // frontier still live
      queue.push_back(nid);
    }
  }
  tree.complete = true;
  return tree;
}

Word word_of(const BfsTree& tree, std::uint32_t id) {
  Word w;
  while (id != 0) {
    w.letters.push_back(letter_of_edge(tree.via[id]));
    id = tree.parent[id];
  }
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

std::optional<Word> backward_connect(const StepImages& steps,
                                     const BfsTree& ball,
                                     const packed::Engine::Mat& target,
                                     std::uint64_t cap) {
  const packed::Engine& eng = steps.eng;
  // Invariant: node y carries suffix sigma(y), the path letters read from
  // y up to the root, with y * eval(sigma(y)) = target.  Expanding y via
  // edge e right-multiplies by the inverse image of letter_of_edge(e),
  // which prepends that letter to the suffix.
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<std::uint32_t> parent;
  std::vector<std::int16_t> via;
  std::vector<const std::string*> key_of;

  std::string tkey = eng.encode_bytes(target);
  if (auto it = ball.index.find(tkey); it != ball.index.end()) {
    return word_of(ball, it->second);
  }
  auto root = index.emplace(std::move(tkey), 0).first;
  key_of.push_back(&root->first);
  parent.push_back(0);
  via.push_back(-1);

  auto suffix_of = [&](std::uint32_t id) {
    Word s;
    while (id != 0) {
      s.letters.push_back(letter_of_edge(via[id]));
      id = parent[id];
    }
    return s;
  };

  std::deque<std::uint32_t> queue{0};
  packed::Engine::Mat child(target.size());
  while (!queue.empty()) {
    std::uint32_t id = queue.front();
    queue.pop_front();
    packed::Engine::Mat cur = eng.decode_bytes(*key_of[id]);
    for (int e = 0; e < static_cast<int>(steps.fwd.size()); ++e) {
      eng.mul(child, cur, steps.fwd[e ^ 1]);
      std::string key = eng.encode_bytes(child);
      std::uint32_t nid = static_cast<std::uint32_t>(key_of.size());
      auto [it, inserted] = index.emplace(std::move(key), nid);
      if (!inserted) continue;
      key_of.push_back(&it->first);
      parent.push_back(id);
      via.push_back(static_cast<std::int16_t>(e));
      if (auto hit = ball.index.find(it->first); hit != ball.index.end()) {
        return Word::concat(word_of(ball, hit->second), suffix_of(nid));
      }
      if (key_of.size() >= cap) return std::nullopt;
      queue.push_back(nid);
    }
  }
  return std::nullopt;
}

}  // namespace slword::detail
