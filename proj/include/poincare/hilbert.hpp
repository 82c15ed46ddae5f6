#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "poincare/rational_function.hpp"

namespace poincare {

/// Eventually-polynomial sequence: finitely many exceptional values below
/// tail_start, a polynomial tail from tail_start on, and zero in the gaps.
///
/// Construction canonicalizes, so two specs describing the same sequence
/// compare equal: tail_start is lowered while the tail already reproduces the
/// value below it, and exceptions keep only nonzero values.
class HilbertSpec {
 public:
  HilbertSpec() = default;

  HilbertSpec(std::map<int, Integer> exceptions, int tail_start, Polynomial tail)
      : exceptions_(std::move(exceptions)), tail_start_(tail_start), tail_(std::move(tail)) {
    validate();
    canonicalize();
  }

  const std::map<int, Integer>& exceptions() const noexcept { return exceptions_; }
  int tail_start() const noexcept { return tail_start_; }
  const Polynomial& tail() const noexcept { return tail_; }

  Integer operator()(int k) const {
    if (k < tail_start_) {
      auto it = exceptions_.find(k);
      return it == exceptions_.end() ? Integer(0) : it->second;
    }
    return to_integer(tail_(Rational(k)));
  }

  friend bool operator==(const HilbertSpec& a, const HilbertSpec& b) {
    return a.tail_start_ == b.tail_start_ && a.exceptions_ == b.exceptions_ && a.tail_ == b.tail_;
  }

  friend std::ostream& operator<<(std::ostream& os, const HilbertSpec& s) { return os << s.to_string(); }

  std::string to_string() const {
    std::string s = "{";
    for (const auto& [k, v] : exceptions_) s += "h" + std::to_string(k) + "=" + poincare::to_string(v) + "; ";
    return s + "tail " + tail_.to_string("k") + " from k=" + std::to_string(tail_start_) + "}";
  }

 private:
  void validate() const {
    if (tail_start_ < 0) throw Error(Errc::invalid_spec, "negative tail_start");
    for (const auto& [k, v] : exceptions_) {
      if (k < 0 || k >= tail_start_)
        throw Error(Errc::invalid_spec, "exception index " + std::to_string(k) + " outside [0, tail_start)");
      if (v < 0) throw Error(Errc::invalid_spec, "negative exceptional value at k=" + std::to_string(k));
    }
    const int dense = tail_start_ + std::max(tail_.degree(), 0) + 2;
    for (int k = tail_start_; k <= tail_start_ + 50; ++k) {
      if (k > dense && (k - tail_start_) % 7 != 0) continue;
      const Rational v = tail_(Rational(k));
      if (!is_integer(v) || v < 0)
        throw Error(Errc::invalid_spec, "tail value " + poincare::to_string(v) + " at k=" + std::to_string(k) +
                                            " is not a nonnegative integer");
    }
  }

  void canonicalize() {
    while (tail_start_ > 0) {
      const int k = tail_start_ - 1;
      auto it = exceptions_.find(k);
      const Integer below = it == exceptions_.end() ? Integer(0) : it->second;
      if (tail_(Rational(k)) != below) break;
      if (it != exceptions_.end()) exceptions_.erase(it);
      --tail_start_;
    }
    std::erase_if(exceptions_, [](const auto& kv) { return kv.second == 0; });
  }

  std::map<int, Integer> exceptions_;
  int tail_start_ = 0;
  Polynomial tail_;
};

inline Integer h_value(const HilbertSpec& spec, int k) {
  if (k < 0) throw Error(Errc::unsupported_argument, "negative order");
  return spec(k);
}

/// Tail polynomial of degree <= max_degree through fn(k0), ..., fn(k0 + max_degree);
/// the next three values are checked against it.
inline Polynomial tail_from_formula(const std::function<Integer(int)>& fn, int k0, int max_degree) {
  std::vector<Rational> values;
  for (int k = k0; k <= k0 + max_degree; ++k) values.emplace_back(fn(k));
  Polynomial p = newton_interpolate(k0, values);
  for (int k = k0 + max_degree + 1; k <= k0 + max_degree + 3; ++k)
    if (p(Rational(k)) != Rational(fn(k)))
      throw Error(Errc::invalid_spec, "formula is not polynomial of degree <= " + std::to_string(max_degree) +
                                          " from k=" + std::to_string(k0));
  return p;
}

/// Spec whose values below k0 come from fn and whose tail is fn interpolated
/// from k0 on.
inline HilbertSpec spec_from_formula(const std::function<Integer(int)>& fn, int k0, int max_degree) {
  std::map<int, Integer> ex;
  for (int k = 0; k < k0; ++k) ex[k] = fn(k);
  return HilbertSpec(std::move(ex), k0, tail_from_formula(fn, k0, max_degree));
}

/// Sum_k h(k) z^k. The tail is expanded in the basis C(k - k0, j), and
/// Sum_m C(m, j) z^m = z^j / (1-z)^{j+1}.
inline RationalFunction gf_from_hilbert(const HilbertSpec& spec) {
  Polynomial head;
  for (const auto& [k, v] : spec.exceptions()) head += Polynomial::monomial(Rational(v), static_cast<std::size_t>(k));
  RationalFunction result(head);
  const Polynomial& tail = spec.tail();
  if (tail.is_zero()) return result;
  const int k0 = spec.tail_start();
  const int deg = tail.degree();
  std::vector<Rational> diffs;
  for (int m = 0; m <= deg; ++m) diffs.push_back(tail(Rational(k0 + m)));
  RationalFunction series;
  for (int j = 0; j <= deg; ++j) {
    if (diffs[0] != 0)
      series += RationalFunction(Polynomial::monomial(diffs[0], static_cast<std::size_t>(j)),
                                 one_minus_z().pow(static_cast<unsigned>(j + 1)));
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  return result + series * RationalFunction(Polynomial::monomial(1, static_cast<std::size_t>(k0)));
}

/// Builds a spec from values[0..] known to follow a polynomial of degree
/// exactly d-1 from some onset (d = 0: eventually zero). The onset is the first index that starts a run of
/// d+3 vanishing d-th differences and whose interpolated tail reproduces every
/// later value; runs that fail verification are skipped. Throws
/// horizon-too-short when no onset <= max_onset qualifies.
inline HilbertSpec spec_from_values(std::span<const Rational> values, int d, int max_onset) {
  if (d < 0) throw Error(Errc::unsupported_argument, "negative difference order");
  const int n = static_cast<int>(values.size());
  for (const auto& v : values)
    if (!is_integer(v) || v < 0)
      throw Error(Errc::invalid_spec, "sequence value " + to_string(v) + " is not a nonnegative integer");
  std::vector<Rational> diff(values.begin(), values.end());
  for (int j = 0; j < d; ++j) {
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    if (!diff.empty()) diff.pop_back();
  }
  const int nd = static_cast<int>(diff.size());
  const int run = d + 3;
  for (int i = 0; i <= max_onset && i + run <= nd; ++i) {
    bool zero_run = true;
    for (int j = i; j < i + run && zero_run; ++j) zero_run = diff[static_cast<std::size_t>(j)] == 0;
    if (!zero_run) continue;
    Polynomial tail;
    if (d > 0) tail = newton_interpolate(i, values.subspan(static_cast<std::size_t>(i), static_cast<std::size_t>(d)));
    bool ok = tail.degree() == d - 1;  // a pole of order d forces degree d-1
    for (int k = i; k < n && ok; ++k) ok = tail(Rational(k)) == values[static_cast<std::size_t>(k)];
    if (!ok) continue;
    std::map<int, Integer> ex;
    for (int k = 0; k < i; ++k) ex[k] = to_integer(values[static_cast<std::size_t>(k)]);
    return HilbertSpec(std::move(ex), i, std::move(tail));
  }
  throw Error(Errc::horizon_too_short,
              "no polynomial tail of degree < " + std::to_string(d) + " found within " + std::to_string(n) + " terms");
}

/// Inverse of gf_from_hilbert for functions whose only pole is z = 1.
inline HilbertSpec spec_from_gf(const RationalFunction& f, int k_confirm) {
  if (f.is_zero()) return HilbertSpec();
  if (f.den().coeff(0) == 0) throw Error(Errc::pole_at_origin, "pole at z = 0: " + f.to_string());
  const int d = multiplicity(f.den(), one_minus_z());
  const Polynomial rest = divmod(f.den(), one_minus_z().pow(static_cast<unsigned>(d))).first;
  if (!rest.is_constant())
    throw Error(Errc::not_eventually_polynomial, "denominator has poles other than z = 1: " + f.to_string());
  const int max_onset = k_confirm - std::max(d - 1, 0) - 5;
  if (max_onset < 0) throw Error(Errc::horizon_too_short, "confirmation horizon too short");
  const int order = std::max(k_confirm, max_onset + 2 * d + 3);
  const PowerSeries s = series_expand(f, order);
  return spec_from_values(s.coefficients, d, max_onset);
}

struct Mismatch {
  int k;
  Integer expected;  // spec value
  Rational got;      // series coefficient
};

struct MatchReport {
  int matched_up_to = -1;
  std::optional<Mismatch> first_mismatch;

  bool matched() const noexcept { return !first_mismatch.has_value(); }
};

/// Compares the coefficients of f with spec for k = 0..K.
inline MatchReport equal_series(const RationalFunction& f, const HilbertSpec& spec, int K) {
  const PowerSeries s = series_expand(f, K);
  MatchReport r;
  for (int k = 0; k <= K; ++k) {
    const Integer h = spec(k);
    if (s[static_cast<std::size_t>(k)] != Rational(h)) {
      r.matched_up_to = k - 1;
      r.first_mismatch = Mismatch{k, h, s[static_cast<std::size_t>(k)]};
      return r;
    }
  }
  r.matched_up_to = K;
  return r;
}

}  // namespace poincare
