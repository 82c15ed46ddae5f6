#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "poincare/expression.hpp"
#include "poincare/polynomial.hpp"

namespace poincare {

/// Reduced quotient num/den of rational polynomials in z.
///
/// Canonical form: gcd(num, den) is constant, and den(0) = 1 whenever
/// den(0) != 0; otherwise den is monic. The zero function is 0/1. Two
/// rational functions are equal iff their canonical forms coincide, so
/// operator== is plain coefficient comparison.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Integer& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RationalFunction z() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }

  /// Exact value at x; throws pole-at-point when den(x) = 0.
  Rational operator()(const Rational& x) const {
    const Rational d = den_(x);
    if (d == 0) throw Error(Errc::pole_at_point, "denominator vanishes at z = " + poincare::to_string(x));
    return num_(x) / d;
  }

  RationalFunction pow(long e) const {
    if (e < 0) {
      if (is_zero()) throw Error(Errc::division_by_zero, "zero raised to a negative power");
      return RationalFunction(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
    }
    return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_}; }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw Error(Errc::division_by_zero, "rational function divided by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

  std::string to_string(const std::string& var = "z") const {
    if (den_ == Polynomial(1)) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw Error(Errc::division_by_zero, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial(1);
      return;
    }
    const Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    const Rational d0 = den_.coeff(0);
    const Rational scale = d0 != 0 ? d0 : den_.leading();
    num_ = num_ / scale;
    den_ = den_ / scale;
  }

  Polynomial num_;
  Polynomial den_;
};

/// Canonical form of num/den; throws division-by-zero when den = 0.
inline RationalFunction ratfun_normalize(const Polynomial& num, const Polynomial& den) {
  return RationalFunction(num, den);
}

/// Taylor coefficients of order 0..truncation at z = 0.
struct PowerSeries {
  std::vector<Rational> coefficients;

  int truncation_order() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
  const Rational& operator[](std::size_t k) const { return coefficients[k]; }
};

/// Coefficients 0..order of the expansion at the origin, from the recurrence
/// den * series = num.
inline PowerSeries series_expand(const RationalFunction& f, int order) {
  if (order < 0) throw Error(Errc::unsupported_argument, "negative truncation order");
  const Polynomial& num = f.num();
  const Polynomial& den = f.den();
  const Rational d0 = den.coeff(0);
  if (d0 == 0) throw Error(Errc::pole_at_origin, "pole at z = 0: " + f.to_string());
  PowerSeries s;
  s.coefficients.resize(static_cast<std::size_t>(order) + 1);
  const int dd = den.degree();
  for (int k = 0; k <= order; ++k) {
    Rational acc = num.coeff(static_cast<std::size_t>(k));
    for (int j = 1; j <= dd && j <= k; ++j)
      acc -= den.coeff(static_cast<std::size_t>(j)) * s.coefficients[static_cast<std::size_t>(k - j)];
    s.coefficients[static_cast<std::size_t>(k)] = acc / d0;
  }
  return s;
}

/// The z^k Taylor coefficient.
inline Rational coeff(const RationalFunction& f, int k) {
  if (k < 0) throw Error(Errc::unsupported_argument, "negative coefficient index");
  return series_expand(f, k).coefficients.back();
}

/// Multiplicity of p in the denominator minus its multiplicity in the numerator.
inline int factor_multiplicity(const RationalFunction& f, const Polynomial& p) {
  if (p.is_constant()) throw Error(Errc::unsupported_argument, "factor must be non-constant");
  if (f.is_zero()) return 0;
  return multiplicity(f.den(), p) - multiplicity(f.num(), p);
}

inline Rational eval(const RationalFunction& f, const Rational& x) { return f(x); }

/// 1 - z, the factor carrying the functional dimension.
inline Polynomial one_minus_z() { return Polynomial{1, -1}; }

/// Parses a literal such as "z^5(3+2z-7z^2+3z^3)/(1-z)^3" in the single
/// symbol z; see expression.hpp for the grammar.
inline RationalFunction parse_rational_function(std::string_view text) {
  return parse_expression<RationalFunction>(
      text,
      [](const SymbolRef& s) {
        if (s.name != "z" || s.indexed) throw Error(Errc::parse_error, "unknown symbol '" + s.to_string() + "'");
        return RationalFunction::z();
      },
      [](const RationalFunction& b, int e) { return b.pow(e); });
}

}  // namespace poincare
