#include "slword/matrices.hpp"

#include <sstream>
#include <utility>

namespace slword {

ModMatrix::ModMatrix(const ZpRing& ring, int m)
    : ring_(ring), m_(m), a_(static_cast<std::size_t>(m) * m, Int(0)) {
  if (m < 1 || m > 16) {
    throw InvalidGroupSpec("ModMatrix: dimension out of range: " +
                           std::to_string(m));
  }
}

int ModMatrix::idx(int i, int j) const {
  if (i < 0 || i >= m_ || j < 0 || j >= m_) {
    throw Error("ModMatrix: index (" + std::to_string(i) + ", " +
                std::to_string(j) + ") out of range for m=" +
                std::to_string(m_));
  }
  return i * m_ + j;
}

ModMatrix ModMatrix::identity(const ZpRing& ring, int m) {
  ModMatrix r(ring, m);
  for (int i = 0; i < m; ++i) r.set(i, i, 1);
  return r;
}

ModMatrix ModMatrix::from_rows(const ZpRing& ring,
                               const std::vector<std::vector<Int>>& rows) {
  int m = static_cast<int>(rows.size());
  ModMatrix r(ring, m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != m) {
      throw Error("ModMatrix::from_rows: ragged rows");
    }
    for (int j = 0; j < m; ++j) r.set(i, j, rows[i][j]);
  }
  return r;
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  require_same_ring(ring_, o.ring_, "matrix mul");
  if (m_ != o.m_) throw Error("matrix mul: dimension mismatch");
  ModMatrix r(ring_, m_);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) {
      Int acc = 0;
      for (int k = 0; k < m_; ++k) acc += a_[i * m_ + k] * o.a_[k * m_ + j];
      r.a_[i * m_ + j] = ring_.reduce(acc);
    }
  }
  return r;
}

ModMatrix ModMatrix::operator+(const ModMatrix& o) const {
  require_same_ring(ring_, o.ring_, "matrix add");
  if (m_ != o.m_) throw Error("matrix add: dimension mismatch");
  ModMatrix r(ring_, m_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = ring_.add(a_[i], o.a_[i]);
  return r;
}

ModMatrix ModMatrix::operator-(const ModMatrix& o) const {
  require_same_ring(ring_, o.ring_, "matrix sub");
  if (m_ != o.m_) throw Error("matrix sub: dimension mismatch");
  ModMatrix r(ring_, m_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = ring_.sub(a_[i], o.a_[i]);
  return r;
}

ModMatrix ModMatrix::operator-() const {
  ModMatrix r(ring_, m_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.neg(a_[i]);
  return r;
}

ModMatrix ModMatrix::scaled(const Int& c) const {
  ModMatrix r(ring_, m_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.mul(a_[i], c);
  return r;
}

Int ModMatrix::trace() const {
  Int t = 0;
  for (int i = 0; i < m_; ++i) t += a_[i * m_ + i];
  return ring_.reduce(t);
}

Int ModMatrix::det() const {
  if (m_ == 1) return a_[0];
  if (m_ == 2) {
    return ring_.reduce(a_[0] * a_[3] - a_[1] * a_[2]);
  }
  if (m_ == 3) {
    const Int& a = a_[0];
    const Int& b = a_[1];
    const Int& c = a_[2];
    const Int& d = a_[3];
    const Int& e = a_[4];
    const Int& f = a_[5];
    const Int& g = a_[6];
    const Int& h = a_[7];
    const Int& i = a_[8];
    return ring_.reduce(a * (e * i - f * h) - b * (d * i - f * g) +
                        c * (d * h - e * g));
  }
  // Bareiss over the integer representatives; divisions are exact, and the
  // final value reduces to the determinant over the ring.
  std::vector<Int> w = a_;
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < m_; ++k) {
    if (w[k * m_ + k] == 0) {
      int r = -1;
      for (int i = k + 1; i < m_; ++i) {
        if (w[i * m_ + k] != 0) {
          r = i;
          break;
        }
      }
      if (r < 0) return 0;
      for (int j = k; j < m_; ++j) std::swap(w[k * m_ + j], w[r * m_ + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < m_; ++i) {
      for (int j = k + 1; j < m_; ++j) {
        w[i * m_ + j] =
            (w[i * m_ + j] * w[k * m_ + k] - w[i * m_ + k] * w[k * m_ + j]) /
            prev;
      }
      w[i * m_ + k] = 0;
    }
    prev = w[k * m_ + k];
  }
  Int d = w[(m_ - 1) * m_ + (m_ - 1)];
  if (sign < 0) d = -d;
  return ring_.reduce(d);
}

ModMatrix ModMatrix::inverse() const {
  Int d = det();
  if (!ring_.is_unit(d)) {
    throw Singular("inverse: determinant " + d.str() + " is not a unit in " +
                   ring_.describe());
  }
  Int dinv = ring_.invert(d);
  if (m_ == 1) {
    ModMatrix r(ring_, 1);
    r.set(0, 0, dinv);
    return r;
  }
  if (m_ == 2) {
    ModMatrix r(ring_, 2);
    r.set(0, 0, a_[3] * dinv);
    r.set(0, 1, -a_[1] * dinv);
    r.set(1, 0, -a_[2] * dinv);
    r.set(1, 1, a_[0] * dinv);
    return r;
  }
  if (m_ == 3) {
    ModMatrix r(ring_, 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        // Cofactor C_ji for the adjugate.
        int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
        int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        Int cof = a_[r0 * 3 + c0] * a_[r1 * 3 + c1] -
                  a_[r0 * 3 + c1] * a_[r1 * 3 + c0];
        r.set(i, j, cof * dinv);
      }
    }
    return r;
  }
  // Gauss-Jordan on [A | I]; a unit pivot exists in every column because
  // det is a unit.
  std::vector<Int> w = a_;
  ModMatrix inv = identity(ring_, m_);
  for (int col = 0; col < m_; ++col) {
    int pr = -1;
    for (int i = col; i < m_; ++i) {
      if (ring_.is_unit(w[i * m_ + col])) {
        pr = i;
        break;
      }
    }
    if (pr < 0) {
      throw Singular("inverse: no unit pivot in column " +
                     std::to_string(col));
    }
    if (pr != col) {
      for (int j = 0; j < m_; ++j) {
        std::swap(w[col * m_ + j], w[pr * m_ + j]);
        std::swap(inv.a_[col * m_ + j], inv.a_[pr * m_ + j]);
      }
    }
    Int pinv = ring_.invert(w[col * m_ + col]);
    for (int j = 0; j < m_; ++j) {
      w[col * m_ + j] = ring_.mul(w[col * m_ + j], pinv);
      inv.a_[col * m_ + j] = ring_.mul(inv.a_[col * m_ + j], pinv);
    }
    for (int i = 0; i < m_; ++i) {
      if (i == col || w[i * m_ + col] == 0) continue;
      Int f = w[i * m_ + col];
      for (int j = 0; j < m_; ++j) {
        w[i * m_ + j] = ring_.sub(w[i * m_ + j], ring_.mul(f, w[col * m_ + j]));
        inv.a_[i * m_ + j] =
            ring_.sub(inv.a_[i * m_ + j], ring_.mul(f, inv.a_[col * m_ + j]));
      }
    }
  }
  return inv;
}

bool ModMatrix::is_identity() const {
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) {
      if (a_[i * m_ + j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

int ModMatrix::congruence_level() const {
  int lvl = ring_.w();
  for (int i = 0; i < m_ && lvl > 0; ++i) {
    for (int j = 0; j < m_ && lvl > 0; ++j) {
      Int d = ring_.sub(a_[i * m_ + j], i == j ? 1 : 0);
      int v = ring_.valuation(d);
      if (v < lvl) lvl = v;
    }
  }
  return lvl;
}

ModMatrix ModMatrix::project(int k) const {
  if (k < 1 || k > ring_.w()) {
    throw Error("project: target exponent " + std::to_string(k) +
                " not in [1, " + std::to_string(ring_.w()) + "]");
  }
  ZpRing r = ZpRing::make(ring_.p(), k);
  ModMatrix out(r, m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) out.set(i, j, a_[i * m_ + j]);
  return out;
}

ModMatrix ModMatrix::lift(int k) const {
  if (k < ring_.w()) {
    throw Error("lift: target exponent " + std::to_string(k) + " below " +
                std::to_string(ring_.w()));
  }
  ZpRing r = ZpRing::make(ring_.p(), k);
  ModMatrix out(r, m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) out.set(i, j, a_[i * m_ + j]);
  return out;
}

ModMatrix ModMatrix::commutator(const ModMatrix& g, const ModMatrix& h) {
  return g.inverse() * h.inverse() * g * h;
}

ModMatrix ModMatrix::conjugate(const ModMatrix& g, const ModMatrix& h) {
  return h.inverse() * g * h;
}

bool ModMatrix::operator==(const ModMatrix& o) const {
  return ring_ == o.ring_ && m_ == o.m_ && a_ == o.a_;
}

std::string ModMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < m_; ++j) {
      if (j) os << ", ";
      os << a_[i * m_ + j];
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

GroupSpec GroupSpec::make(std::int64_t p, int m, int n, int w) {
  if (w < 0) w = n;
  if (m < 2 || m > 16) {
    throw InvalidGroupSpec("GroupSpec: m must be in [2, 16], got " +
                           std::to_string(m));
  }
  // ZpRing::make rejects p = 2 and composites.
  ZpRing::make(p, 1);
  if (m > 2 && p < m) {
    throw InvalidGroupSpec("GroupSpec: need p >= m for m > 2, got p=" +
                           std::to_string(p) + ", m=" + std::to_string(m));
  }
  if (n < 1) {
    throw InvalidGroupSpec("GroupSpec: n must be >= 1, got " +
                           std::to_string(n));
  }
  if (w < n) {
    throw InvalidGroupSpec("GroupSpec: working exponent below n");
  }
  return GroupSpec{p, m, n, w};
}

Int group_order(std::int64_t p, int m, int n) {
  Int q = 1;
  for (int i = 0; i < (n - 1) * (m * m - 1); ++i) q *= p;
  for (int i = 0; i < m * (m - 1) / 2; ++i) q *= p;
  for (int i = 2; i <= m; ++i) {
    Int pi = 1;
    for (int k = 0; k < i; ++k) pi *= p;
    q *= pi - 1;
  }
  return q;
}

Int group_order(const GroupSpec& spec) {
  return group_order(spec.p, spec.m, spec.n);
}

ModMatrix sl_lift(const ModMatrix& g, int k) {
  if (g.det() != 1) {
    throw Error("sl_lift: determinant is not 1 at the source exponent");
  }
  ModMatrix h = g.lift(k);
  Int d = h.det();
  Int dinv = h.ring().invert(d);
  for (int j = 0; j < h.m(); ++j) h.set(0, j, h.at(0, j) * dinv);
  return h;
}

}  // namespace slword
