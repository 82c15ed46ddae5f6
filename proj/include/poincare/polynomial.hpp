#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "poincare/rational.hpp"

namespace poincare {

/// Dense univariate polynomial with rational coefficients, stored by
/// ascending degree. The coefficient vector never carries trailing zeros, so
/// the zero polynomial is the empty vector.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const Integer& c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(c);
  }
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static Polynomial monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial variable() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  int valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<int>(i);
    return 0;
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Rational> v;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(coeffs_[i] * static_cast<long>(i));
    return Polynomial(std::move(v));
  }

  Polynomial pow(unsigned e) const {
    Polynomial result(1), base(*this);
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  /// p(z) -> p(z + shift)
  Polynomial shifted(const Rational& shift) const {
    Polynomial acc;
    const Polynomial lin{std::vector<Rational>{shift, Rational(1)}};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + Polynomial(*it);
    return acc;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this / leading();
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }
  friend Polynomial operator/(Polynomial a, const Rational& c) {
    if (c == 0) throw Error(Errc::division_by_zero, "polynomial divided by zero scalar");
    for (auto& x : a.coeffs_) x /= c;
    return a;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

  std::string to_string(const std::string& var = "z") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      Rational mag = abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      const bool unit = mag == 1 && i > 0;
      if (!unit) {
        const std::string m = poincare::to_string(mag);
        out += is_integer(mag) || i == 0 ? m : "(" + m + ")";
        if (i > 0) out += "*";
      }
      if (i == 1) out += var;
      if (i > 1) out += var + "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws on a zero divisor.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  const Rational lead = b.leading();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(static_cast<std::size_t>(j));
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

/// Monic greatest common divisor; gcd(0,0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Multiplicity of the non-constant factor p in the nonzero polynomial q.
inline int multiplicity(Polynomial q, const Polynomial& p) {
  if (p.is_constant()) throw Error(Errc::unsupported_argument, "multiplicity of a constant factor");
  if (q.is_zero()) throw Error(Errc::unsupported_argument, "multiplicity in the zero polynomial");
  int m = 0;
  for (;;) {
    auto [quot, rem] = divmod(q, p);
    if (!rem.is_zero()) return m;
    q = std::move(quot);
    ++m;
  }
}

/// Newton forward interpolation: the unique polynomial of degree < values.size()
/// with p(start + i) = values[i].
inline Polynomial newton_interpolate(long start, std::span<const Rational> values) {
  std::vector<Rational> diffs(values.begin(), values.end());
  std::vector<Rational> leading;  // Delta^j v(start)
  for (std::size_t j = 0; j < values.size(); ++j) {
    leading.push_back(diffs[0]);
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  Polynomial result;
  Polynomial basis(1);  // C(k - start, j)
  for (std::size_t j = 0; j < leading.size(); ++j) {
    result += basis * leading[j];
    basis = basis * Polynomial{std::vector<Rational>{Rational(-start - static_cast<long>(j)), Rational(1)}} /
            Rational(static_cast<long>(j + 1));
  }
  return result;
}

}  // namespace poincare
