#include "slword/words.hpp"

#include <cstdlib>

#include "slword/packed.hpp"

namespace slword {

Word Word::concat(const Word& u, const Word& v) {
  Word r = u;
  r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
  return r;
}

Word Word::inverse() const {
  Word r;
  r.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    r.letters.push_back(-*it);
  }
  return r;
}

Word Word::reduced() const {
  Word r;
  r.letters.reserve(letters.size());
  for (Letter l : letters) {
    if (!r.letters.empty() && r.letters.back() == -l) {
      r.letters.pop_back();
    } else {
      r.letters.push_back(l);
    }
  }
  return r;
}

Word Word::commutator(const Word& u, const Word& v) {
  return concat(concat(u.inverse(), v.inverse()), concat(u, v));
}

Word Word::parse(const std::string& text) {
  Word w;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos == text.size()) return w;
  for (;;) {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') {
      throw ParseError("word: expected a letter at position " +
                       std::to_string(pos));
    }
    long long v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + (text[pos] - '0');
      if (v > (1LL << 30)) throw ParseError("word: letter out of range");
      ++pos;
    }
    if (v == 0) throw ParseError("word: letter 0 is not allowed");
    w.letters.push_back(static_cast<Letter>(neg ? -v : v));
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw ParseError("word: expected ',' at position " +
                       std::to_string(pos));
    }
    ++pos;
    if (pos == text.size()) throw ParseError("word: trailing comma");
  }
  return w;
}

std::string Word::format() const {
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(letters[i]);
  }
  return s;
}

GeneratingSet::GeneratingSet(const GroupSpec& spec, std::vector<ModMatrix> gens)
    : spec_(GroupSpec::make(spec.p, spec.m, spec.n, spec.w)),
      gens_(std::move(gens)) {
  if (gens_.empty()) {
    throw InvalidGroupSpec("GeneratingSet: empty set");
  }
  ZpRing ring = spec_.ring();
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const ModMatrix& g = gens_[i];
    if (g.m() != spec_.m || g.ring() != ring) {
      throw InvalidGroupSpec("GeneratingSet: generator " + std::to_string(i) +
                             " has wrong shape or ring");
    }
    if (g.det() != 1) {
      throw InvalidGroupSpec("GeneratingSet: generator " + std::to_string(i) +
                             " has determinant " + g.det().str() + " != 1");
    }
  }
  inv_.reserve(gens_.size());
  for (const ModMatrix& g : gens_) inv_.push_back(g.inverse());
}

const ModMatrix& GeneratingSet::letter_image(Letter l) const {
  if (l == 0 || std::abs(l) > size()) {
    throw Error("letter " + std::to_string(l) + " outside [1, " +
                std::to_string(size()) + "]");
  }
  return l > 0 ? gens_[l - 1] : inv_[-l - 1];
}

ModMatrix evaluate_exact(const Word& w, const GeneratingSet& S, int k) {
  if (k < 1 || k > S.spec().n) {
    throw Error("evaluate: exponent " + std::to_string(k) + " outside [1, " +
                std::to_string(S.spec().n) + "]");
  }
  ZpRing ring = S.spec().ring_at(k);
  ModMatrix acc = ModMatrix::identity(ring, S.spec().m);
  for (Letter l : w.letters) {
    acc = acc * S.letter_image(l).project(k);
  }
  return acc;
}

ModMatrix evaluate(const Word& w, const GeneratingSet& S, int k) {
  if (k < 1 || k > S.spec().n) {
    throw Error("evaluate: exponent " + std::to_string(k) + " outside [1, " +
                std::to_string(S.spec().n) + "]");
  }
  if (!packed::fits(S.spec().p, k)) return evaluate_exact(w, S, k);

  packed::Engine eng = packed::Engine::make(S.spec().p, k, S.spec().m);
  std::vector<packed::Engine::Mat> img(
      static_cast<std::size_t>(2) * S.size());
  std::vector<bool> have(img.size(), false);
  auto image_of = [&](Letter l) -> const packed::Engine::Mat& {
    std::size_t slot = l > 0 ? static_cast<std::size_t>(l - 1)
                             : static_cast<std::size_t>(S.size() - l - 1);
    if (!have[slot]) {
      img[slot] = eng.from_mod(S.letter_image(l).project(k));
      have[slot] = true;
    }
    return img[slot];
  };
  packed::Engine::Mat acc = eng.identity();
  packed::Engine::Mat tmp(acc.size());
  for (Letter l : w.letters) {
    eng.mul(tmp, acc, image_of(l));
    acc.swap(tmp);
  }
  return eng.to_mod(acc);
}

}  // namespace slword
