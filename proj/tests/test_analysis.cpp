#include <gtest/gtest.h>

#include <random>

#include "poincare/analysis.hpp"
#include "poincare/catalog.hpp"
#include "test_support.hpp"

using namespace poincare;
using poincare::testkit::rf;

TEST(Cyclotomic, KnownPolynomials) {
  EXPECT_EQ(cyclotomic(1), one_minus_z());
  EXPECT_EQ(cyclotomic(2), Polynomial({1, 1}));
  EXPECT_EQ(cyclotomic(3), Polynomial({1, 1, 1}));
  EXPECT_EQ(cyclotomic(4), Polynomial({1, 0, 1}));
  EXPECT_EQ(cyclotomic(6), Polynomial({1, -1, 1}));
  EXPECT_THROW(cyclotomic(0), Error);
}

TEST(Cyclotomic, ProductOverDivisors) {
  // prod_{d | m} Phi_d = 1 - z^m (with the +1 normalization, up to sign)
  const auto table = cyclotomic_table(30);
  for (int m = 1; m <= 30; ++m) {
    Polynomial prod(1);
    for (int d = 1; d <= m; ++d)
      if (m % d == 0) prod = prod * table[static_cast<std::size_t>(d)];
    const Polynomial target = Polynomial(1) - Polynomial::monomial(1, static_cast<std::size_t>(m));
    EXPECT_EQ(prod, target) << m;
  }
}

TEST(Analyze, Riemannian) {
  const PoleReport r4 = analyze(claimed_poincare("riemannian", {{"n", 4}}));
  EXPECT_EQ(r4.d, 4);
  EXPECT_EQ(r4.sigma, 6);
  EXPECT_TRUE(r4.conforms_to_PR);
  const PoleReport r2 = analyze(rf("z^2(1-z+2z^2-z^3)/(1-z)^2"));
  EXPECT_EQ(r2.d, 2);
  EXPECT_EQ(r2.sigma, 1);
}

TEST(Analyze, RiemannianRankIsBinomial) {
  for (long n = 2; n <= 8; ++n) EXPECT_EQ(analyze(claimed_poincare("riemannian", {{"n", n}})).sigma, Rational(binomial(n, 2)));
}

TEST(Analyze, HamiltonianTwo) {
  const PoleReport r = analyze(claimed_poincare("hamiltonian-critical", {{"n", 2}}));
  EXPECT_EQ(r.d, 2);
  EXPECT_EQ(r.sigma, Rational(1, 4));
  ASSERT_EQ(r.other_unit_poles.size(), 1u);
  EXPECT_EQ(r.other_unit_poles[0].factor, Polynomial({1, 1}));
  EXPECT_EQ(r.other_unit_poles[0].multiplicity, 2);
  EXPECT_FALSE(r.conforms_to_PR);
}

TEST(Analyze, HamiltonianRankIsPowerOfTwo) {
  for (long n = 1; n <= 8; ++n) {
    const PoleReport r = analyze(claimed_poincare("hamiltonian-critical", {{"n", n}}));
    Rational expected(1);
    for (long i = 0; i < n; ++i) expected /= 2;
    EXPECT_EQ(r.d, n);
    EXPECT_EQ(r.sigma, expected);
    ASSERT_EQ(r.other_unit_poles.size(), 1u);
    EXPECT_EQ(r.other_unit_poles[0].multiplicity, n);
  }
}

TEST(Analyze, PowerOfOneMinusZSquared) {
  const PoleReport r = analyze(rf("1/(1-z^2)^3"));
  EXPECT_EQ(r.d, 3);
  EXPECT_EQ(r.sigma, Rational(1, 8));
}

TEST(Analyze, ZeroAndPolynomial) {
  const PoleReport z = analyze(RationalFunction());
  EXPECT_EQ(z.d, 0);
  EXPECT_TRUE(z.conforms_to_PR);
  const PoleReport p = analyze(rf("2z"));
  EXPECT_EQ(p.d, 0);
  EXPECT_EQ(p.sigma, 2);
  EXPECT_TRUE(p.conforms_to_PR);
}

TEST(Analyze, PoleOrderIsAdditive) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(0, 4);
  for (int t = 0; t < 200; ++t) {
    const int a = e(rng), b = e(rng);
    Polynomial na = testkit::random_nonzero_polynomial(rng, 3), nb = testkit::random_nonzero_polynomial(rng, 3);
    while (na(1) == 0) na = testkit::random_nonzero_polynomial(rng, 3);
    while (nb(1) == 0) nb = testkit::random_nonzero_polynomial(rng, 3);
    const RationalFunction f(na, one_minus_z().pow(static_cast<unsigned>(a)));
    const RationalFunction g(nb, one_minus_z().pow(static_cast<unsigned>(b)));
    EXPECT_EQ(analyze(f * g).d, analyze(f).d + analyze(g).d);
    EXPECT_EQ(analyze(f * g).sigma, analyze(f).sigma * analyze(g).sigma);
  }
}

TEST(SSequence, Examples) {
  const auto s = s_sequence(claimed_poincare("ode-general"), 6);
  EXPECT_EQ(s[5], 3);
  EXPECT_EQ(s[6], 14);
  EXPECT_EQ(s_sequence(RationalFunction(), 5), std::vector<Rational>(6, Rational(0)));
  const std::vector<Rational> r2{0, 0, 1, 2, 5};
  EXPECT_EQ(s_sequence(claimed_poincare("riemannian", {{"n", 2}}), 4), r2);
}

TEST(SSequence, DifferencesRecoverCoefficients) {
  for (const auto& e : list_entries())
    for (const auto& ps : parameter_samples(e, 4)) {
      const RationalFunction p = claimed_poincare(e.id, ps);
      const auto s = s_sequence(p, 30);
      const PowerSeries h = series_expand(p, 30);
      EXPECT_EQ(s[0], h[0]);
      for (std::size_t k = 1; k < s.size(); ++k) EXPECT_EQ(s[k] - s[k - 1], h[k]) << e.id << " k=" << k;
    }
}

TEST(Asymptotic, Examples) {
  const AsymptoticResult k2 = asymptotic_details(claimed_poincare("kaehler", {{"n", 2}}));
  EXPECT_TRUE(k2.ok);
  EXPECT_EQ(analyze(claimed_poincare("kaehler", {{"n", 2}})).d, 4);
  const AsymptoticResult one = asymptotic_details(rf("1/(1-z)"));
  EXPECT_TRUE(one.ok);
  EXPECT_EQ(one.sigma, 1);
  try {
    asymptotic_check(claimed_poincare("hamiltonian-critical", {{"n", 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_pr_form);
  }
}

TEST(Asymptotic, RelativeErrorShrinksLikeOneOverK) {
  // the fixed 10/K tolerance is only met when the subleading constant is <= 10;
  // what holds for every entry is s_K / C(K+d,d) -> sigma at rate 1/K
  for (const auto& e : list_entries()) {
    if (!e.pr_form) continue;
    for (const auto& ps : parameter_samples(e, 5)) {
      const RationalFunction p = claimed_poincare(e.id, ps);
      const AsymptoticResult a = asymptotic_details(p, 200), b = asymptotic_details(p, 2000);
      if (a.sigma == 0) continue;
      const Rational ea = abs(a.ratio - a.sigma), eb = abs(b.ratio - b.sigma);
      EXPECT_LE(eb * 5, ea + Rational(1, 1000000)) << e.id << " " << to_string(ps);
      EXPECT_LE(eb * 2000, abs(b.sigma) * 40) << e.id << " " << to_string(ps);
    }
  }
}

TEST(Asymptotic, KaehlerThreeExceedsFixedTolerance) {
  const AsymptoticResult a = asymptotic_details(claimed_poincare("kaehler", {{"n", 3}}));
  EXPECT_FALSE(a.ok);
  EXPECT_GT(abs(a.ratio - a.sigma) * 200, abs(a.sigma) * 10);
}
