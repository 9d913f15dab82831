#pragma once

// Exact scalar arithmetic: rationals, Laurent polynomials in q, and the
// sign parameter epsilon distinguishing the odd (-1) and classical (+1)
// variants of the theory.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace oddtl {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// +1 selects the classical variant, -1 the odd one.
class Epsilon {
 public:
  constexpr explicit Epsilon(int v) : value_(v) {
    if (v != 1 && v != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  }
  constexpr int value() const { return value_; }
  /// value()^k, defined for any integer k.
  constexpr int pow(long long k) const { return (value_ == 1 || k % 2 == 0) ? 1 : -1; }
  friend constexpr bool operator==(Epsilon a, Epsilon b) { return a.value_ == b.value_; }

 private:
  int value_;
};

inline constexpr Epsilon kOdd{-1};
inline constexpr Epsilon kClassical{+1};

/// Laurent polynomial in q over the rationals. No zero coefficients stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c) {  // NOLINT: implicit constant
    if (c != 0) coeffs_[0] = c;
  }
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT

  static LaurentPoly monomial(const Rational& c, int exp) {
    LaurentPoly p;
    if (c != 0) p.coeffs_[exp] = c;
    return p;
  }
  static LaurentPoly q(int exp = 1) { return monomial(1, exp); }

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }

  Rational coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }
  int min_exp() const {
    if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
    return coeffs_.begin()->first;
  }
  int max_exp() const {
    if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = -c;
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend auto operator<=>(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ <=> b.coeffs_; }

  LaurentPoly shifted(int by) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + by] = c;
    return r;
  }

  /// Substitute a nonzero rational for q.
  Rational evaluate_at(const Rational& q) const {
    if (q == 0) throw std::invalid_argument("cannot evaluate Laurent polynomial at q = 0");
    Rational acc = 0;
    for (const auto& [e, c] : coeffs_) {
      Rational p = 1;
      Rational base = e >= 0 ? q : Rational(1) / q;
      for (int i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
      acc += c * p;
    }
    return acc;
  }

  std::string to_string(const std::string& var = "q") const;
  static LaurentPoly parse(const std::string& text, const std::string& var = "q");

 private:
  void add_term(int exp, const Rational& c) {
    auto it = coeffs_.find(exp);
    if (it == coeffs_.end()) {
      if (c != 0) coeffs_[exp] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  std::map<int, Rational> coeffs_;
};

inline std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // highest power first, matching the usual way quantum integers are written
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = abs == 1;
    if (!unit || e == 0) out << abs.str();
    if (e != 0) {
      if (!unit) out << "*";
      out << var;
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

// Grammar: sum of terms; term = [rational] [* ] [var [^ int]].
inline LaurentPoly LaurentPoly::parse(const std::string& text, const std::string& var) {
  size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto parse_int = [&]() -> Int {
    skip();
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
    skip();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("expected integer at position " + std::to_string(i) + " in '" + text + "'");
    Int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
    return neg ? Int(-v) : v;
  };
  LaurentPoly result;
  skip();
  if (i == text.size()) throw std::invalid_argument("empty polynomial");
  while (true) {
    skip();
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
    skip();
    Rational coeff = 1;
    bool saw_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      Int num = parse_int();
      Int den = 1;
      skip();
      if (i < text.size() && text[i] == '/') {
        ++i;
        den = parse_int();
        if (den == 0) throw std::invalid_argument("zero denominator in coefficient");
      }
      coeff = Rational(num, den);
      saw_coeff = true;
      skip();
      if (i < text.size() && text[i] == '*') { ++i; skip(); }
    }
    int exp = 0;
    if (i + var.size() <= text.size() && text.compare(i, var.size(), var) == 0) {
      i += var.size();
      exp = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        exp = static_cast<int>(parse_int());
      }
    } else if (!saw_coeff) {
      throw std::invalid_argument("expected term at position " + std::to_string(i) + " in '" + text + "'");
    }
    if (neg) coeff = -coeff;
    result = result + monomial(coeff, exp);
    skip();
    if (i == text.size()) break;
    if (text[i] != '+' && text[i] != '-')
      throw std::invalid_argument("unexpected character '" + std::string(1, text[i]) + "' in '" + text + "'");
  }
  return result;
}

/// The super quantum integer [n] = (q^n - (eps q)^-n) / (q - eps q^-1).
/// For n >= 0 this is sum_{j=0}^{n-1} eps^j q^{n-1-2j}; [-n] = -eps^n [n].
inline LaurentPoly quantum_int(int n, Epsilon eps = kOdd) {
  if (n < 0) {
    LaurentPoly p = quantum_int(-n, eps);
    return eps.pow(-n) == 1 ? -p : p;
  }
  LaurentPoly p;
  for (int j = 0; j < n; ++j) p = p + LaurentPoly::monomial(eps.pow(j), n - 1 - 2 * j);
  return p;
}

/// Loop value delta = -[2] = -(q + eps q^-1).
inline LaurentPoly delta(Epsilon eps = kOdd) { return -quantum_int(2, eps); }

}  // namespace oddtl
