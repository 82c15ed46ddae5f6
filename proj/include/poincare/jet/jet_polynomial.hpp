#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "poincare/rational.hpp"

namespace poincare::jet {

/// Sorted (variable id, exponent > 0) pairs.
using Monomial = std::vector<std::pair<int, int>>;

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

/// Sparse multivariate polynomial with rational coefficients over jet
/// coordinates, addressed by integer ids (see JetSpace).
class JetPolynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  JetPolynomial() = default;
  JetPolynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Monomial{}, c);
  }
  JetPolynomial(const Integer& c) : JetPolynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  JetPolynomial(long c) : JetPolynomial(Rational(c)) {}            // NOLINT(google-explicit-constructor)

  static JetPolynomial variable(int id) {
    JetPolynomial p;
    p.terms_.emplace(Monomial{{id, 1}}, Rational(1));
    return p;
  }

  static JetPolynomial term(const Rational& c, Monomial m) {
    JetPolynomial p;
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::set<int> variables() const {
    std::set<int> v;
    for (const auto& [m, c] : terms_)
      for (const auto& [id, e] : m) v.insert(id);
    return v;
  }

  JetPolynomial& operator+=(const JetPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  JetPolynomial& operator-=(const JetPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend JetPolynomial operator+(JetPolynomial a, const JetPolynomial& b) { return a += b; }
  friend JetPolynomial operator-(JetPolynomial a, const JetPolynomial& b) { return a -= b; }
  friend JetPolynomial operator-(const JetPolynomial& a) { return JetPolynomial() - a; }

  friend JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b) {
    JetPolynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
    return out;
  }
  JetPolynomial& operator*=(const JetPolynomial& o) { return *this = *this * o; }

  /// Division by a nonzero constant only.
  friend JetPolynomial operator/(const JetPolynomial& a, const JetPolynomial& b) {
    if (!b.is_constant()) throw Error(Errc::unsupported_argument, "division by a non-constant jet polynomial");
    if (b.is_zero()) throw Error(Errc::division_by_zero, "division by zero");
    const Rational inv = 1 / b.constant_term();
    JetPolynomial out = a;
    for (auto& [m, c] : out.terms_) c *= inv;
    return out;
  }

  JetPolynomial pow(unsigned e) const {
    JetPolynomial r(1), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e) b *= b;
    }
    return r;
  }

  JetPolynomial derivative(int id) const {
    JetPolynomial out;
    for (const auto& [m, c] : terms_) {
      auto it = std::find_if(m.begin(), m.end(), [id](const auto& ve) { return ve.first == id; });
      if (it == m.end()) continue;
      Monomial d = m;
      auto& slot = d[static_cast<std::size_t>(it - m.begin())];
      const int e = slot.second;
      if (--slot.second == 0) d.erase(d.begin() + (it - m.begin()));
      out.add_term(d, c * e);
    }
    return out;
  }

  /// Value at point[id]; ids beyond the point raise bad-point.
  Rational evaluate(std::span<const Rational> point) const {
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (const auto& [id, e] : m) {
        if (id < 0 || static_cast<std::size_t>(id) >= point.size())
          throw Error(Errc::bad_point, "coordinate " + std::to_string(id) + " missing from the point");
        t *= pow_int(point[static_cast<std::size_t>(id)], e);
      }
      acc += t;
    }
    return acc;
  }

  friend bool operator==(const JetPolynomial& a, const JetPolynomial& b) { return a.terms_ == b.terms_; }

  std::string to_string(const std::function<std::string(int)>& name) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      const bool neg = c < 0;
      const Rational a = neg ? Rational(-c) : c;
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      std::string body;
      for (const auto& [id, e] : m) {
        if (!body.empty()) body += "*";
        body += name(id) + (e > 1 ? "^" + std::to_string(e) : "");
      }
      if (body.empty()) {
        s += poincare::to_string(a);
      } else {
        s += (a == 1 ? "" : poincare::to_string(a) + "*") + body;
      }
    }
    return s;
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }

  Terms terms_;
};

/// num/den without cancellation; enough for checking derivatives of
/// invariants at points.
struct JetRational {
  JetPolynomial num;
  JetPolynomial den = JetPolynomial(1);

  JetRational() = default;
  JetRational(JetPolynomial n) : num(std::move(n)) {}  // NOLINT(google-explicit-constructor)
  JetRational(const Integer& c) : num(c) {}            // NOLINT(google-explicit-constructor)
  JetRational(JetPolynomial n, JetPolynomial d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw Error(Errc::division_by_zero, "zero denominator");
  }

  friend JetRational operator+(const JetRational& a, const JetRational& b) {
    if (a.den == b.den) return {a.num + b.num, a.den};
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend JetRational operator-(const JetRational& a, const JetRational& b) {
    if (a.den == b.den) return {a.num - b.num, a.den};
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend JetRational operator-(const JetRational& a) { return {-a.num, a.den}; }
  friend JetRational operator*(const JetRational& a, const JetRational& b) { return {a.num * b.num, a.den * b.den}; }
  friend JetRational operator/(const JetRational& a, const JetRational& b) {
    if (b.num.is_zero()) throw Error(Errc::division_by_zero, "division by zero");
    return {a.num * b.den, a.den * b.num};
  }

  JetRational pow(int e) const {
    if (e >= 0) return {num.pow(static_cast<unsigned>(e)), den.pow(static_cast<unsigned>(e))};
    if (num.is_zero()) throw Error(Errc::division_by_zero, "zero raised to a negative power");
    return {den.pow(static_cast<unsigned>(-e)), num.pow(static_cast<unsigned>(-e))};
  }

  std::set<int> variables() const {
    std::set<int> v = num.variables();
    v.merge(den.variables());
    return v;
  }
};

}  // namespace poincare::jet
