#pragma once

#include <algorithm>
#include <vector>

#include "poincare/rational_function.hpp"

namespace poincare {

/// Phi_1..Phi_M, each normalized with constant term +1 (Phi_1 = 1 - z).
inline std::vector<Polynomial> cyclotomic_table(int M) {
  std::vector<Polynomial> phi(static_cast<std::size_t>(std::max(M, 0)) + 1);
  for (int m = 1; m <= M; ++m) {
    Polynomial p = Polynomial(1) - Polynomial::monomial(1, static_cast<std::size_t>(m));
    for (int d = 1; d < m; ++d)
      if (m % d == 0) p = divmod(p, phi[static_cast<std::size_t>(d)]).first;
    phi[static_cast<std::size_t>(m)] = p / p.coeff(0);
  }
  return phi;
}

inline Polynomial cyclotomic(int m) {
  if (m < 1) throw Error(Errc::unsupported_argument, "cyclotomic index must be positive");
  return cyclotomic_table(m).back();
}

struct UnitPole {
  int m;             // order of the roots of unity
  Polynomial factor;  // Phi_m
  int multiplicity;
};

struct PoleReport {
  int d = 0;
  Rational sigma;
  std::vector<UnitPole> other_unit_poles;
  bool conforms_to_PR = false;
};

/// Pole order at z = 1, sigma = ((1-z)^d f)(1), and the remaining poles on the
/// unit circle found by trial division with Phi_m, deg Phi_m <= deg den.
inline PoleReport analyze(const RationalFunction& f) {
  PoleReport r;
  if (f.is_zero()) {
    r.conforms_to_PR = true;
    return r;
  }
  r.d = std::max(0, factor_multiplicity(f, one_minus_z()));
  const RationalFunction reduced = f * RationalFunction(one_minus_z().pow(static_cast<unsigned>(r.d)));
  if (reduced.den()(1) != 0) r.sigma = reduced(1);
  const int deg = f.den().degree();
  // phi(m) >= sqrt(m/2), so m <= 2 deg^2 covers every Phi_m of degree <= deg
  const auto table = cyclotomic_table(std::max(2, 2 * deg * deg));
  for (int m = 2; m < static_cast<int>(table.size()); ++m) {
    const Polynomial& phi = table[static_cast<std::size_t>(m)];
    if (phi.degree() > deg) continue;
    const int mult = multiplicity(f.den(), phi);
    if (mult > 0) r.other_unit_poles.push_back({m, phi, mult});
  }
  r.conforms_to_PR = f.den() == one_minus_z().pow(static_cast<unsigned>(r.d));
  return r;
}

/// s_k = h_0 + ... + h_k for k = 0..K, i.e. the coefficients of P/(1-z).
inline std::vector<Rational> s_sequence(const RationalFunction& f, int K) {
  const PowerSeries s = series_expand(f, K);
  std::vector<Rational> out;
  Rational acc = 0;
  for (const auto& c : s.coefficients) out.push_back(acc += c);
  return out;
}

struct AsymptoticResult {
  bool ok = false;
  int K = 0;
  Rational ratio;  // s_K / C(K+d, d)
  Rational sigma;
};

/// Compares s_K with sigma C(K+d, d), the number of jets of order <= K of
/// sigma functions of d variables; passes when the relative error is <= 10/K.
inline AsymptoticResult asymptotic_details(const RationalFunction& f, int K = 200) {
  if (K < 1) throw Error(Errc::unsupported_argument, "K must be positive");
  const PoleReport rep = analyze(f);
  if (!rep.conforms_to_PR)
    throw Error(Errc::not_pr_form, "denominator is not a power of (1-z): " + f.to_string());
  AsymptoticResult a;
  a.K = K;
  a.sigma = rep.sigma;
  a.ratio = s_sequence(f, K).back() / Rational(binomial(K + rep.d, rep.d));
  a.ok = abs(a.ratio - a.sigma) * K <= abs(a.sigma) * 10;
  return a;
}

inline bool asymptotic_check(const RationalFunction& f, int K = 200) { return asymptotic_details(f, K).ok; }

}  // namespace poincare
