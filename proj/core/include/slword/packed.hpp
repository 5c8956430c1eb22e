#ifndef SLWORD_PACKED_HPP
#define SLWORD_PACKED_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "slword/matrices.hpp"

namespace slword::packed {

// Fixed-width engine for matrices over Z/q with q = p^k below 2^31;
// products accumulate in 128 bits, so one reduction per entry suffices.
// This is the workhorse behind breadth-first search and long word
// evaluation; the bignum path stays the source of truth and the engine is
// cross-checked against it.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t(1) << 31;

bool fits(std::int64_t p, int k);

class Engine {
 public:
  using Mat = std::vector<std::uint64_t>;

  static Engine make(std::int64_t p, int k, int m);  // TooLarge if !fits

  std::uint64_t q() const { return q_; }
  int m() const { return m_; }
  int k() const { return k_; }
  std::int64_t p() const { return p_; }

  Mat identity() const;
  Mat from_mod(const ModMatrix& g) const;  // ring must be (p, k)
  ModMatrix to_mod(const Mat& a) const;

  void mul(Mat& dst, const Mat& a, const Mat& b) const;
  Mat mul(const Mat& a, const Mat& b) const;
  bool is_identity(const Mat& a) const;

  // Key encodings for hash maps.  Every matrix packs into bytes; small
  // moduli pack the whole matrix into one u64.
  int bits_per_entry() const { return bits_; }
  bool fits_u64_key() const { return bits_ * m_ * m_ <= 64; }
  std::uint64_t encode_u64(const Mat& a) const;
  std::string encode_bytes(const Mat& a) const;
  Mat decode_bytes(const std::string& s) const;
  int bytes_per_entry() const { return bits_ <= 8 ? 1 : bits_ <= 16 ? 2 : 4; }

 private:
  Engine(std::int64_t p, int k, int m, std::uint64_t q);
  std::int64_t p_;
  int k_;
  int m_;
  std::uint64_t q_;
  int bits_;
};

}  // namespace slword::packed

#endif
