#include <gtest/gtest.h>

#include <random>

#include "poincare/hilbert.hpp"
#include "test_support.hpp"

using namespace poincare;
using poincare::testkit::rf;

namespace {

Polynomial kpoly(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }

HilbertSpec riemannian2() { return HilbertSpec({{2, 1}, {3, 1}}, 4, kpoly({-1, 1})); }

HilbertSpec self_dual_metrics() {
  // h2 = 9, h_k = (k-1)(k^2+25k+36)/6 for k > 2
  const Polynomial k = Polynomial::variable();
  const Polynomial tail = (k - Polynomial(1)) * (k * k + k * Rational(25) + Polynomial(36)) / Rational(6);
  return HilbertSpec({{2, 9}}, 3, tail);
}

}  // namespace

TEST(HValue, Examples) {
  EXPECT_EQ(h_value(riemannian2(), 3), 1);
  EXPECT_EQ(h_value(riemannian2(), 1), 0);
  EXPECT_EQ(h_value(riemannian2(), 7), 6);
  // (k-1)(k^2+25k+36)/6 at k=4 is 3*152/6 = 76
  EXPECT_EQ(h_value(self_dual_metrics(), 4), 76);
  EXPECT_EQ(h_value(self_dual_metrics(), 4), coeff(rf("z^2(9+4z-30z^2+24z^3-6z^4)/(1-z)^4"), 4));
}

TEST(HilbertSpec, Validation) {
  EXPECT_THROW(HilbertSpec({{5, 1}}, 3, Polynomial()), Error);
  EXPECT_THROW(HilbertSpec({{1, -1}}, 3, Polynomial()), Error);
  EXPECT_THROW(HilbertSpec({}, 0, kpoly({Rational(1, 2)})), Error);
  EXPECT_THROW(HilbertSpec({}, 0, kpoly({-3, 1})), Error);
  EXPECT_NO_THROW(HilbertSpec({}, 0, kpoly({0, Rational(1, 2), Rational(1, 2)})));
}

TEST(HilbertSpec, CanonicalForm) {
  // same sequence written with a later tail start
  EXPECT_EQ(HilbertSpec({{4, 3}, {5, 4}}, 6, kpoly({-1, 1})), HilbertSpec({}, 4, kpoly({-1, 1})));
  EXPECT_EQ(HilbertSpec({{1, 0}}, 3, Polynomial()), HilbertSpec());
  EXPECT_EQ(riemannian2().tail_start(), 4);
}

TEST(GfFromHilbert, Examples) {
  EXPECT_EQ(gf_from_hilbert(riemannian2()), rf("z^2(1-z+2z^2-z^3)/(1-z)^2"));
  EXPECT_EQ(gf_from_hilbert(HilbertSpec()), RationalFunction());
  EXPECT_EQ(gf_from_hilbert(HilbertSpec({}, 4, kpoly({-2, 2}))), rf("2z^4(3-2z)/(1-z)^2"));
}

TEST(SpecFromGf, Examples) {
  const Polynomial k = Polynomial::variable();
  const HilbertSpec expected({{5, 3}}, 6, k * (k - Polynomial(1)) / Rational(2) - Polynomial(4));
  EXPECT_EQ(spec_from_gf(rf("z^5(3+2z-7z^2+3z^3)/(1-z)^3"), 40), expected);
  try {
    spec_from_gf(rf("1/(1-z^2)^2"), 40);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_eventually_polynomial);
  }
  EXPECT_EQ(spec_from_gf(RationalFunction(), 40), HilbertSpec());
}

TEST(SpecFromGf, HorizonTooShort) {
  try {
    spec_from_gf(rf("z^30/(1-z)"), 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::horizon_too_short);
  }
}

TEST(SpecFromGf, LowOrderExceptionBelowTail) {
  // h3 = 13 where the tail 3k^2 - 7 would give 20
  const auto f = rf("z^2(1+10z+5z^2-17z^3+7z^4)/(1-z)^3");
  const HilbertSpec s = spec_from_gf(f, 40);
  EXPECT_EQ(s(2), 1);
  EXPECT_EQ(s(3), 13);
  EXPECT_EQ(s(4), 41);
  EXPECT_EQ(s.tail_start(), 4);
}

TEST(SpecFromGf, PolynomialInput) {
  const HilbertSpec s = spec_from_gf(rf("z+z^3+z^5"), 30);
  EXPECT_EQ(s, HilbertSpec({{1, 1}, {3, 1}, {5, 1}}, 6, Polynomial()));
}

TEST(EqualSeries, Examples) {
  const MatchReport full = equal_series(rf("z^2(9+4z-30z^2+24z^3-6z^4)/(1-z)^4"), self_dual_metrics(), 40);
  EXPECT_TRUE(full.matched());
  EXPECT_EQ(full.matched_up_to, 40);

  const MatchReport miss = equal_series(rf("1/(1-z)"), HilbertSpec(), 10);
  ASSERT_TRUE(miss.first_mismatch.has_value());
  EXPECT_EQ(miss.first_mismatch->k, 0);
  EXPECT_EQ(miss.first_mismatch->expected, 0);
  EXPECT_EQ(miss.first_mismatch->got, 1);
  EXPECT_EQ(miss.matched_up_to, -1);

  const auto ac2 = rf("2z^2(1+8z-12z^2+6z^3-z^4)/(1-z)^4");
  const HilbertSpec ac2_spec = spec_from_formula(
      [](int k) -> Integer {
        if (k < 3) return k == 2 ? 2 : 0;
        return 8 * binomial(k + 3, k) - 4 * binomial(k + 4, k + 1) + 4;
      },
      3, 3);
  EXPECT_TRUE(equal_series(ac2, ac2_spec, 6).matched());
  const PowerSeries s = series_expand(ac2, 6);
  const std::vector<long> table{0, 0, 2, 24, 60, 116, 196};
  for (std::size_t k = 0; k < table.size(); ++k) EXPECT_EQ(s[k], table[k]);
}

TEST(Properties, RandomRoundTrip) {
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<int> deg(-1, 4), start(0, 8), val(0, 30);
  for (int i = 0; i < 1000; ++i) {
    // tail as a nonnegative combination of C(k - k0, j) keeps it integer and nonnegative
    const int k0 = start(rng);
    const int d = deg(rng);
    Polynomial tail;
    Polynomial basis(1);
    for (int j = 0; j <= d; ++j) {
      tail += basis * Rational(val(rng));
      basis = basis * Polynomial(std::vector<Rational>{Rational(-k0 - j), Rational(1)}) / Rational(j + 1);
    }
    std::map<int, Integer> ex;
    for (int k = 0; k < k0; ++k)
      if (val(rng) % 2) ex[k] = val(rng);
    const HilbertSpec spec(ex, k0, tail);
    const RationalFunction f = gf_from_hilbert(spec);
    EXPECT_NE(f.den().coeff(0), 0);
    if (!spec.tail().is_zero()) EXPECT_EQ(multiplicity(f.den(), one_minus_z()), spec.tail().degree() + 1);
    EXPECT_EQ(spec_from_gf(f, 60), spec);
    const PowerSeries s = series_expand(f, 60);
    for (int k = 0; k <= 60; ++k) ASSERT_EQ(s[static_cast<std::size_t>(k)], Rational(spec(k)));
  }
}
