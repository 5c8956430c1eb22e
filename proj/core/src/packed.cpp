#include "slword/packed.hpp"

namespace slword::packed {

bool fits(std::int64_t p, int k) {
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q >= kMaxModulus) return false;
  }
  return true;
}

Engine::Engine(std::int64_t p, int k, int m, std::uint64_t q)
    : p_(p), k_(k), m_(m), q_(q) {
  bits_ = 1;
  while ((std::uint64_t(1) << bits_) < q_) ++bits_;
}

Engine Engine::make(std::int64_t p, int k, int m) {
  if (!fits(p, k)) {
    throw TooLarge("packed::Engine: " + std::to_string(p) + "^" +
                   std::to_string(k) + " exceeds the fixed-width modulus");
  }
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) q *= static_cast<std::uint64_t>(p);
  return Engine(p, k, m, q);
}

Engine::Mat Engine::identity() const {
  Mat r(static_cast<std::size_t>(m_) * m_, 0);
  for (int i = 0; i < m_; ++i) r[i * m_ + i] = 1;
  return r;
}

Engine::Mat Engine::from_mod(const ModMatrix& g) const {
  if (g.ring().p() != p_ || g.ring().w() != k_ || g.m() != m_) {
    throw Error("packed::from_mod: ring or dimension mismatch");
  }
  Mat r(static_cast<std::size_t>(m_) * m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      r[i * m_ + j] = g.at(i, j).convert_to<std::uint64_t>();
  return r;
}

ModMatrix Engine::to_mod(const Mat& a) const {
  ModMatrix g(ZpRing::make(p_, k_), m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) g.set(i, j, Int(a[i * m_ + j]));
  return g;
}

void Engine::mul(Mat& dst, const Mat& a, const Mat& b) const {
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) {
      unsigned __int128 acc = 0;
      for (int l = 0; l < m_; ++l) {
        acc += static_cast<unsigned __int128>(a[i * m_ + l]) * b[l * m_ + j];
      }
      dst[i * m_ + j] = static_cast<std::uint64_t>(acc % q_);
    }
  }
}

Engine::Mat Engine::mul(const Mat& a, const Mat& b) const {
  Mat r(static_cast<std::size_t>(m_) * m_);
  mul(r, a, b);
  return r;
}

bool Engine::is_identity(const Mat& a) const {
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      if (a[i * m_ + j] != (i == j ? 1u : 0u)) return false;
  return true;
}

std::uint64_t Engine::encode_u64(const Mat& a) const {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    key = (key << bits_) | a[i];
  }
  return key;
}

std::string Engine::encode_bytes(const Mat& a) const {
  int bpe = bytes_per_entry();
  std::string s(a.size() * static_cast<std::size_t>(bpe), '\0');
  std::size_t pos = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t v = a[i];
    for (int b = 0; b < bpe; ++b) {
      s[pos++] = static_cast<char>(v & 0xff);
      v >>= 8;
    }
  }
  return s;
}

Engine::Mat Engine::decode_bytes(const std::string& s) const {
  int bpe = bytes_per_entry();
  std::size_t count = static_cast<std::size_t>(m_) * m_;
  if (s.size() != count * static_cast<std::size_t>(bpe)) {
    throw Error("packed::decode_bytes: wrong key length");
  }
  Mat a(count);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t v = 0;
    for (int b = 0; b < bpe; ++b) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(s[pos++]))
           << (8 * b);
    }
    if (v >= q_) throw Error("packed::decode_bytes: entry out of range");
    a[i] = v;
  }
  return a;
}

}  // namespace slword::packed
