#pragma once

// Rational functions in q, kept in reduced canonical form so that equality
// is structural. The denominator is normalized to have constant term 1 after
// factoring all powers of q into the numerator.

#include <utility>
#include <vector>

#include "scalars.hpp"

namespace oddtl {

namespace detail {

// Dense polynomial helpers (coefficient vectors, index = exponent, no
// trailing zeros). Used only for gcd computation.
using DensePoly = std::vector<Rational>;

inline void trim(DensePoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline DensePoly to_dense(const LaurentPoly& p, int shift) {
  DensePoly d(static_cast<size_t>(p.max_exp() - shift) + 1, Rational(0));
  for (const auto& [e, c] : p.coeffs()) d[static_cast<size_t>(e - shift)] = c;
  return d;
}

inline LaurentPoly from_dense(const DensePoly& d) {
  LaurentPoly p;
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) p = p + LaurentPoly::monomial(d[i], static_cast<int>(i));
  return p;
}

inline void make_monic(DensePoly& p) {
  trim(p);
  if (p.empty()) return;
  Rational lead = p.back();
  if (lead == 1) return;
  for (auto& c : p) c /= lead;
}

// Remainder of a by b (b monic, nonzero).
inline DensePoly poly_rem(DensePoly a, const DensePoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    trim(a);
  }
  return a;
}

inline DensePoly poly_gcd(DensePoly a, DensePoly b) {
  trim(a);
  trim(b);
  make_monic(a);
  make_monic(b);
  while (!b.empty()) {
    DensePoly r = poly_rem(a, b);
    make_monic(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;  // monic (or empty if both inputs were zero)
}

// Exact quotient a / b with b monic dividing a.
inline DensePoly poly_div(DensePoly a, const DensePoly& b) {
  trim(a);
  DensePoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back();
    size_t off = a.size() - b.size();
    q[off] = f;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("poly_div: non-exact division");
  return q;
}

}  // namespace detail

/// Quotient of two Laurent polynomials in q, always in reduced form.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
  RatFunc(const Rational& c) : num_(c), den_(1) {}     // NOLINT
  RatFunc(int c) : num_(c), den_(1) {}                 // NOLINT
  RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == LaurentPoly(1); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend auto operator<=>(const RatFunc& a, const RatFunc& b) {
    if (auto c = a.num_ <=> b.num_; c != 0) return c;
    return a.den_ <=> b.den_;
  }

  Rational evaluate_at(const Rational& q) const {
    Rational d = den_.evaluate_at(q);
    if (d == 0) throw std::domain_error("pole of rational function at given q");
    return num_.evaluate_at(q) / d;
  }

  std::string to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
  }

 private:
  void reduce() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    int a = num_.min_exp(), b = den_.min_exp();
    detail::DensePoly p = detail::to_dense(num_, a), q = detail::to_dense(den_, b);
    detail::DensePoly g = detail::poly_gcd(p, q);
    if (g.size() > 1) {
      p = detail::poly_div(p, g);
      q = detail::poly_div(q, g);
    }
    // All q-powers migrate to the numerator; denominator starts at q^0.
    num_ = detail::from_dense(p).shifted(a - b);
    den_ = detail::from_dense(q);
    Rational low = den_.coeffs().begin()->second;  // make den's lowest term 1
    if (low != 1) {
      LaurentPoly inv = LaurentPoly(Rational(1) / low);
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  LaurentPoly num_, den_;
};

}  // namespace oddtl
