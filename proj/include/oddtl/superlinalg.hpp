#pragma once

// Finite-dimensional super vector spaces over the field of rational
// functions in q, with the Koszul sign built into the tensor product of
// maps: (f (x) g)(v (x) w) = (-1)^{|g||v|} f(v) (x) g(w).

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ratfunc.hpp"

namespace oddtl {

/// Ordered list of basis parities (0 = even, 1 = odd).
struct SuperSpace {
  std::vector<uint8_t> parities;

  size_t dim() const { return parities.size(); }
  friend bool operator==(const SuperSpace& a, const SuperSpace& b) = default;

  /// Tensor product basis ordered lexicographically, left factor major.
  friend SuperSpace tensor(const SuperSpace& a, const SuperSpace& b) {
    SuperSpace r;
    r.parities.reserve(a.dim() * b.dim());
    for (uint8_t pa : a.parities)
      for (uint8_t pb : b.parities) r.parities.push_back((pa + pb) % 2);
    return r;
  }
};

/// Dense matrix of a linear map between super spaces. Row index = target
/// basis vector, column index = source basis vector.
class SuperMap {
 public:
  SuperMap() = default;
  SuperMap(SuperSpace src, SuperSpace tgt)
      : src_(std::move(src)),
        tgt_(std::move(tgt)),
        a_(tgt_.dim(), std::vector<RatFunc>(src_.dim())) {}

  static SuperMap identity(const SuperSpace& v) {
    SuperMap m(v, v);
    for (size_t i = 0; i < v.dim(); ++i) m.a_[i][i] = 1;
    return m;
  }

  const SuperSpace& source() const { return src_; }
  const SuperSpace& target() const { return tgt_; }
  RatFunc& at(size_t row, size_t col) { return a_[row][col]; }
  const RatFunc& at(size_t row, size_t col) const { return a_[row][col]; }

  bool is_zero() const {
    for (const auto& row : a_)
      for (const auto& e : row)
        if (!e.is_zero()) return false;
    return true;
  }

  /// A map is homogeneous of parity p if every nonzero entry connects basis
  /// vectors whose parities differ by p. Returns 0 or 1; throws if the map
  /// is not homogeneous (the zero map counts as even).
  int parity() const {
    int p = -1;
    for (size_t i = 0; i < tgt_.dim(); ++i)
      for (size_t j = 0; j < src_.dim(); ++j)
        if (!a_[i][j].is_zero()) {
          int e = (tgt_.parities[i] + src_.parities[j]) % 2;
          if (p == -1) p = e;
          else if (p != e) throw std::logic_error("SuperMap::parity: map is not homogeneous");
        }
    return p == -1 ? 0 : p;
  }

  friend SuperMap operator+(const SuperMap& f, const SuperMap& g) {
    if (f.src_ != g.src_ || f.tgt_ != g.tgt_) throw std::invalid_argument("SuperMap +: shape mismatch");
    SuperMap r = f;
    for (size_t i = 0; i < r.tgt_.dim(); ++i)
      for (size_t j = 0; j < r.src_.dim(); ++j) r.a_[i][j] = r.a_[i][j] + g.a_[i][j];
    return r;
  }
  friend SuperMap operator*(const RatFunc& c, const SuperMap& f) {
    SuperMap r = f;
    for (auto& row : r.a_)
      for (auto& e : row) e = c * e;
    return r;
  }
  friend bool operator==(const SuperMap& f, const SuperMap& g) {
    return f.src_ == g.src_ && f.tgt_ == g.tgt_ && f.a_ == g.a_;
  }

  /// Composite f after g.
  friend SuperMap compose(const SuperMap& f, const SuperMap& g) {
    if (f.src_ != g.tgt_) throw std::invalid_argument("SuperMap compose: shape mismatch");
    SuperMap r(g.src_, f.tgt_);
    for (size_t i = 0; i < f.tgt_.dim(); ++i)
      for (size_t k = 0; k < g.src_.dim(); ++k) {
        RatFunc acc;
        for (size_t j = 0; j < f.src_.dim(); ++j)
          if (!f.a_[i][j].is_zero() && !g.a_[j][k].is_zero()) acc = acc + f.a_[i][j] * g.a_[j][k];
        r.a_[i][k] = acc;
      }
    return r;
  }

  /// Super tensor product of maps (Koszul sign).
  friend SuperMap tensor(const SuperMap& f, const SuperMap& g) {
    SuperMap r(tensor(f.src_, g.src_), tensor(f.tgt_, g.tgt_));
    size_t gs = g.src_.dim(), gt = g.tgt_.dim();
    for (size_t i = 0; i < f.tgt_.dim(); ++i)
      for (size_t k = 0; k < f.src_.dim(); ++k) {
        if (f.a_[i][k].is_zero()) continue;
        for (size_t j = 0; j < gt; ++j)
          for (size_t l = 0; l < gs; ++l) {
            if (g.a_[j][l].is_zero()) continue;
            // |g| on this entry = tgt_par[j] + src_par[l]; sign (-1)^{|g||v|}
            int sign = ((g.tgt_.parities[j] + g.src_.parities[l]) * f.src_.parities[k]) % 2;
            RatFunc e = f.a_[i][k] * g.a_[j][l];
            r.a_[i * gt + j][k * gs + l] = sign ? -e : e;
          }
      }
    return r;
  }

  /// Rank after substituting q = q0 (exact Gaussian elimination over Q).
  size_t rank_at(const Rational& q0) const {
    std::vector<std::vector<Rational>> m(tgt_.dim(), std::vector<Rational>(src_.dim()));
    for (size_t i = 0; i < tgt_.dim(); ++i)
      for (size_t j = 0; j < src_.dim(); ++j) m[i][j] = a_[i][j].evaluate_at(q0);
    size_t rank = 0;
    for (size_t col = 0; col < src_.dim() && rank < m.size(); ++col) {
      size_t piv = rank;
      while (piv < m.size() && m[piv][col] == 0) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[piv], m[rank]);
      for (size_t i = rank + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        Rational f = m[i][col] / m[rank][col];
        for (size_t j = col; j < src_.dim(); ++j) m[i][j] -= f * m[rank][j];
      }
      ++rank;
    }
    return rank;
  }

 private:
  SuperSpace src_, tgt_;
  std::vector<std::vector<RatFunc>> a_;
};

}  // namespace oddtl
