#include <gtest/gtest.h>

#include <random>

#include "poincare/analysis.hpp"
#include "poincare/catalog.hpp"
#include "poincare/jetflow.hpp"

using namespace poincare;
using namespace poincare::jet;

namespace {

JetSpace plane(int order) { return JetSpace({"x", "y"}, {"u"}, order); }

JetPolynomial var(const JetSpace& sp, const char* name) { return JetPolynomial::variable(sp.find(name)); }

std::vector<Integer> series_h(const std::string& expr, int K) {
  const PowerSeries s = series_expand(parse_rational_function(expr), K);
  std::vector<Integer> out;
  for (const auto& c : s.coefficients) out.push_back(to_integer(c));
  return out;
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST(JetSpace, CoordinateCountAndNames) {
  for (int k = 0; k <= 6; ++k) {
    const JetSpace sp = plane(k);
    EXPECT_EQ(sp.dim(), 2 + binomial(2 + k, k).get_si());
  }
  const JetSpace sp = plane(3);
  EXPECT_EQ(sp.name(0), "x");
  EXPECT_EQ(sp.name(2), "u");
  EXPECT_EQ(sp.name(3), "u_10");
  EXPECT_EQ(sp.name(4), "u_01");
  EXPECT_EQ(sp.name(5), "u_20");
  EXPECT_EQ(sp.find("u_12"), sp.id(0, {1, 2}));
  EXPECT_EQ(sp.find("u_40"), -1);
  EXPECT_EQ(JetSpace({"x", "y"}, {"u"}, 11).name(JetSpace({"x", "y"}, {"u"}, 11).id(0, {10, 1})), "u[10,1]");
}

TEST(JetSpace, IdsStableAcrossOrders) {
  const JetSpace lo = plane(3), hi = plane(6);
  for (int id = 0; id < lo.dim(); ++id) EXPECT_EQ(lo.name(id), hi.name(id));
}

TEST(TotalDerivative, CoordinateShift) {
  const JetSpace sp = plane(3);
  EXPECT_EQ(total_derivative(var(sp, "u_10"), 0, sp), var(sp, "u_20"));
  EXPECT_EQ(total_derivative(var(sp, "u_10"), 1, sp), var(sp, "u_11"));
}

TEST(TotalDerivative, ProductRule) {
  const JetSpace sp = plane(3);
  const JetPolynomial e = var(sp, "x") * var(sp, "u_01");
  EXPECT_EQ(total_derivative(e, 0, sp), var(sp, "u_01") + var(sp, "x") * var(sp, "u_11"));
}

TEST(TotalDerivative, OrderExceeded) {
  const JetSpace sp = plane(2);
  try {
    total_derivative(var(sp, "u_20"), 0, sp);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::order_exceeded);
  }
}

TEST(TotalDerivative, MixedDerivativeOfProductMatchesLeibniz) {
  // D_x D_y (f u_10) with f = 1 + 2x - y + 3x^2 + xy - 4y^2; oracle: Leibniz
  // sum over sub-indices of f_{a,b} u_{1+1-a, 1-b} with binomial weights.
  const JetSpace sp = plane(3);
  const JetPolynomial x = var(sp, "x"), y = var(sp, "y");
  const JetPolynomial f = JetPolynomial(1) + JetPolynomial(2) * x - y + JetPolynomial(3) * x * x + x * y -
                          JetPolynomial(4) * y * y;
  const JetPolynomial lhs = total_derivative(total_derivative(f * var(sp, "u_10"), 1, sp), 0, sp);
  const JetPolynomial fx = f.derivative(0), fy = f.derivative(1), fxy = fx.derivative(1);
  const JetPolynomial rhs = f * var(sp, "u_21") + fx * var(sp, "u_11") + fy * var(sp, "u_20") + fxy * var(sp, "u_10");
  EXPECT_EQ(lhs, rhs);
}

TEST(Prolong, TranslationShiftsJets) {
  const JetSpace sp = plane(4);
  const VectorField dx{{JetPolynomial(1), {}}, {JetPolynomial()}};
  const ProlongedField pf = prolong(dx, sp);
  EXPECT_EQ(pf.components[0], JetPolynomial(1));
  for (int id = 2; id < sp.dim(); ++id) EXPECT_TRUE(pf.components[static_cast<std::size_t>(id)].is_zero()) << sp.name(id);
}

TEST(Prolong, FiberTranslationOnly) {
  const JetSpace sp = plane(5);
  const VectorField du{{JetPolynomial(), JetPolynomial()}, {JetPolynomial(1)}};
  const ProlongedField pf = prolong(du, sp);
  EXPECT_EQ(pf.components[2], JetPolynomial(1));
  for (int id = 0; id < sp.dim(); ++id)
    if (id != 2) {
      EXPECT_TRUE(pf.components[static_cast<std::size_t>(id)].is_zero()) << sp.name(id);
    }
}

TEST(Prolong, CharacteristicFormula) {
  // X = xi d/dx + eta d/dy + phi d/du; oracle: component on u_s equals
  // D^s Q + xi u_{s+1_x} + eta u_{s+1_y}, with Q = phi - xi u_10 - eta u_01.
  const int k = 4;
  const JetSpace sp = plane(k), big = plane(k + 1);
  const JetPolynomial x = var(big, "x"), y = var(big, "y"), u = var(big, "u");
  const VectorField X{{x * y + u, x * x - JetPolynomial(3) * y}, {u * u + x}};
  const ProlongedField pf = prolong(X, sp);
  const JetPolynomial Q = X.phi[0] - X.xi[0] * var(big, "u_10") - X.xi[1] * var(big, "u_01");
  for (int id = sp.p(); id < sp.dim(); ++id) {
    const MultiIndex s = sp.sigma(id);
    JetPolynomial d = Q;
    for (int i = 0; i < 2; ++i)
      for (int t = 0; t < s[static_cast<std::size_t>(i)]; ++t) d = total_derivative(d, i, big);
    d += X.xi[0] * JetPolynomial::variable(big.shifted(id, 0)) + X.xi[1] * JetPolynomial::variable(big.shifted(id, 1));
    EXPECT_EQ(pf.components[static_cast<std::size_t>(id)], d) << sp.name(id);
  }
}

TEST(Prolong, ProjectionConsistency) {
  for (const Scenario* sc : {&lie_example_scenario(), &metric2d_scenario()}) {
    const int top = sc == &lie_example_scenario() ? 7 : 4;
    const JetSpace order0(sc->base, sc->fiber, 0);
    const auto basis = expand(sc->generators, order0, 3);
    const JetSpace hi(sc->base, sc->fiber, top);
    for (const auto& b : basis) {
      const ProlongedField full = prolong(b.field, hi);
      for (int k = 0; k < top; ++k) {
        const JetSpace lo(sc->base, sc->fiber, k);
        const ProlongedField part = prolong(b.field, lo);
        for (int id = 0; id < lo.dim(); ++id)
          ASSERT_EQ(part.components[static_cast<std::size_t>(id)], full.components[static_cast<std::size_t>(id)])
              << b.label << " " << lo.name(id);
      }
    }
  }
}

TEST(Prolong, SecondOrderClosedFormOnSigma1) {
  // f d/dx with f = x^a y^b: at the origin with u_10 = 0 the order-2
  // components are -(i f_{i-1,j} u_20 + j f_{i,j-1} u_11).
  const JetSpace sp = plane(2);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-9, 9);
  for (const auto& e : graded_multi_indices(2, 3)) {
    Monomial m;
    for (int i = 0; i < 2; ++i)
      if (e[static_cast<std::size_t>(i)] > 0) m.emplace_back(i, e[static_cast<std::size_t>(i)]);
    const VectorField X{{JetPolynomial::term(1, m), JetPolynomial()}, {JetPolynomial()}};
    const ProlongedField pf = prolong(X, sp);
    auto fder = [&](int i, int j) -> Integer {
      return (i == e[0] && j == e[1]) ? factorial(i) * factorial(j) : Integer(0);
    };
    std::vector<Rational> pt(static_cast<std::size_t>(sp.dim()));
    for (int id = 2; id < sp.dim(); ++id) pt[static_cast<std::size_t>(id)] = num(rng);
    pt[static_cast<std::size_t>(sp.find("u_10"))] = 0;
    const Rational u20 = pt[static_cast<std::size_t>(sp.find("u_20"))];
    const Rational u11 = pt[static_cast<std::size_t>(sp.find("u_11"))];
    for (const auto& s : graded_multi_indices(2, 2)) {
      if (degree(s) != 2) continue;
      const int i = s[0], j = s[1];
      Rational expect = 0;
      if (i > 0) expect -= Rational(i * fder(i - 1, j)) * u20;
      if (j > 0) expect -= Rational(j * fder(i, j - 1)) * u11;
      EXPECT_EQ(pf.components[static_cast<std::size_t>(sp.id(0, s))].evaluate(pt), expect);
    }
  }
}

TEST(Prolong, RejectsJetDependentCoefficients) {
  const JetSpace sp = plane(2);
  const VectorField X{{var(sp, "u_10"), JetPolynomial()}, {JetPolynomial()}};
  EXPECT_THROW(prolong(X, sp), Error);
}

TEST(ExactRank, AgainstFloatingFreeOracle) {
  // oracle: rank via rational Gaussian elimination
  auto oracle = [](std::vector<std::vector<Rational>> a) {
    int r = 0;
    const std::size_t nc = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < nc; ++c) {
      std::size_t p = static_cast<std::size_t>(r);
      while (p < a.size() && a[p][c] == 0) ++p;
      if (p == a.size()) continue;
      std::swap(a[p], a[static_cast<std::size_t>(r)]);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == static_cast<std::size_t>(r) || a[i][c] == 0) continue;
        const Rational f = a[i][c] / a[static_cast<std::size_t>(r)][c];
        for (std::size_t j = 0; j < nc; ++j) a[i][j] -= f * a[static_cast<std::size_t>(r)][j];
      }
      ++r;
    }
    return r;
  };
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(1, 7), num(-3, 3), den(1, 4), lowrank(0, 2);
  for (int t = 0; t < 300; ++t) {
    const int m = dim(rng), n = dim(rng);
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (auto& row : a)
      for (auto& v : row) {
        v = Rational(num(rng), den(rng));
        v.canonicalize();
      }
    if (lowrank(rng) == 0 && m > 2) a[2] = a[0];
    EXPECT_EQ(exact_rank(a), oracle(a));
  }
  EXPECT_EQ(exact_rank({}), 0);
}

TEST(OrbitRank, GenericPointOpenOrbit) {
  const Scenario& sc = lie_example_scenario();
  const ProlongedFamily fam(sc, 3);
  std::mt19937_64 rng(3);
  const auto pt = sample_point(sc, fam.space(), sc.stratum("Sigma0"), 3, rng);
  EXPECT_EQ(orbit_rank(fam, pt, 3, 4), fam.space().dim_at(3));
  EXPECT_EQ(fam.space().dim_at(3), 12);
}

TEST(OrbitRank, Sigma1SecondOrderCodimension) {
  const Scenario& sc = lie_example_scenario();
  const ProlongedFamily fam(sc, 2);
  const CodimSequence c = stratum_codim_sequence(sc, fam, sc.stratum("Sigma1"), 2, 1);
  EXPECT_EQ(c.s[2], 2);
}

TEST(OrbitRank, EmptyFieldListAndBadPoint) {
  EXPECT_EQ(orbit_rank(std::vector<ProlongedField>{}, std::vector<Rational>{}), 0);
  const Scenario& sc = lie_example_scenario();
  const ProlongedFamily fam(sc, 2);
  try {
    orbit_rank(fam, std::vector<Rational>(4), 2, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::bad_point);
  }
  EXPECT_THROW(orbit_rank(fam, std::vector<Rational>(100), 5, 6), Error);
}

TEST(OrbitRank, SentinelParametersAreInert) {
  // the cutoff k+1 passes the sentinel check; cutoff k-1 lets a degree-k
  // parameter act at order k and is rejected
  const Scenario& sc = lie_example_scenario();
  const ProlongedFamily fam(sc, 4);
  std::mt19937_64 rng(5);
  for (int k = 1; k <= 4; ++k) {
    const auto pt = sample_point(sc, fam.space(), sc.stratum("Sigma0"), k, rng);
    EXPECT_NO_THROW(orbit_rank(fam, pt, k, k + 1));
    try {
      orbit_rank(fam, pt, k, k - 1);
      FAIL() << k;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::unsupported_argument);
    }
  }
  // degree-6 monomials are inert on J^4 at base points of the stratum
  for (int t = 0; t < 3; ++t) {
    const auto pt = sample_point(sc, fam.space(), sc.stratum("Sigma0"), 4, rng);
    for (std::size_t b = 0; b < fam.basis().size(); ++b) {
      if (fam.basis()[b].degree != 6) continue;
      for (int id = 0; id < fam.space().dim_at(4); ++id)
        EXPECT_EQ(fam.prolonged()[b].components[static_cast<std::size_t>(id)].evaluate(pt), 0) << fam.basis()[b].label;
    }
  }
}

TEST(StratumSequence, ExamplesFromTheTable) {
  const Scenario& sc = lie_example_scenario();
  const ProlongedFamily fam(sc, 6);
  const auto s1 = stratum_codim_sequence(sc, fam, sc.stratum("Sigma1"), 5, 1);
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(s1.h[static_cast<std::size_t>(k)], 1) << k;
  const auto s3 = stratum_codim_sequence(sc, fam, sc.stratum("Sigma3"), 5, 1);
  EXPECT_EQ(s3.h[1], 1);
  EXPECT_EQ(s3.h[2], 1);
  for (int k = 3; k <= 5; ++k) EXPECT_EQ(s3.h[static_cast<std::size_t>(k)], 2) << k;
  const auto s6 = stratum_codim_sequence(sc, fam, sc.stratum("Sigma6"), 6, 1);
  for (int k = 4; k <= 6; ++k) EXPECT_EQ(s6.h[static_cast<std::size_t>(k)], 3) << k;
}

TEST(StratumSequence, TangencyViolationIsReported) {
  // u_01 = 0 is not preserved by f d/dx
  Scenario sc = lie_example_scenario();
  sc.strata.push_back({"bad", {"u_01"}, {}, ""});
  const ProlongedFamily fam(sc, 1);
  try {
    stratum_codim_sequence(sc, fam, sc.strata.back(), 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_scenario);
  }
}

TEST(LieTable, RowsMatchReferenceSeries) {
  const auto rows = lie_example_table(7, 1);
  ASSERT_EQ(rows.size(), 8u);
  const Scenario& sc = lie_example_scenario();
  for (std::size_t i = 0; i < sc.strata.size(); ++i) {
    EXPECT_EQ(rows[i].label, sc.strata[i].label);
    EXPECT_FALSE(rows[i].analytic);
    if (rows[i].label == "Sigma5") continue;
    EXPECT_EQ(rows[i].h, series_h(sc.strata[i].reference, 7)) << rows[i].label;
    EXPECT_EQ(rows[i].poincare, parse_rational_function(sc.strata[i].reference)) << rows[i].label;
  }
  EXPECT_EQ(rows[0].poincare, RationalFunction());
  EXPECT_EQ(rows[2].poincare, parse_rational_function("(z-z^2+z^3)/(1-z)"));
  EXPECT_EQ(rows[4].poincare, parse_rational_function("(z+z^4)/(1-z)"));
  EXPECT_EQ(rows[7].label, "SigmaInf");
  EXPECT_TRUE(rows[7].analytic);
  EXPECT_EQ(rows[7].poincare, parse_rational_function("z/(1-z)"));
}

TEST(LieTable, Sigma5AgainstCharacteristicOracle) {
  // oracle: independent rank count with prolonged components
  // D^s(-f u_10) + f u_{s+1_x} over f = x^a y^b, a + b <= k + 1, plus d/dy
  // and d/du, gives h = 0,1,1,0,2,2 on Sigma5 (and 0,1,1,1,2,2 on Sigma4,
  // 0,1,1,1,3,3 on Sigma6). The reference row (z-z^3+z^4)/(1-z) disagrees
  // from k = 4 on.
  const auto rows = lie_example_table(7, 1);
  EXPECT_EQ(rows[5].h, (std::vector<Integer>{0, 1, 1, 0, 2, 2, 2, 2}));
  EXPECT_EQ(rows[5].poincare, parse_rational_function("(z-z^3+2z^4)/(1-z)"));
  EXPECT_NE(rows[5].poincare, parse_rational_function(lie_example_scenario().stratum("Sigma5").reference));
}

TEST(LieTable, SeedAndJobIndependence) {
  const auto a = lie_example_table(7, 1);
  for (std::uint64_t seed : {2u, 3u}) {
    const auto b = lie_example_table(7, seed, 4);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].h, b[i].h) << a[i].label << " seed " << seed;
  }
}

TEST(LieTable, Invariants) {
  const Scenario& sc = lie_example_scenario();
  int positives = 0;
  for (const auto& iv : sc.invariants) {
    const auto r = annihilation_details(sc, iv.expr, sc.stratum(iv.stratum), 1);
    EXPECT_EQ(r.ok, iv.expect) << iv.name << " on " << iv.stratum;
    if (r.ok) {
      EXPECT_EQ(r.points, 20);
    }
    positives += iv.expect ? 1 : 0;
  }
  EXPECT_EQ(positives, 10);
}

TEST(Annihilation, BadSampleWhenDenominatorVanishesOnStratum) {
  const Scenario& sc = lie_example_scenario();
  try {
    annihilation_check(sc, "u_01/u_10", sc.stratum("Sigma1"), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::bad_sample);
  }
}

TEST(Metric2d, MatchesRiemannianTwo) {
  const auto h = metric2d_case(4, 1);
  EXPECT_EQ(h, (std::vector<Integer>{0, 0, 1, 1, 3}));
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(h[static_cast<std::size_t>(k)], hilbert_spec("riemannian", {{"n", 2}})(k));
  const auto h1 = metric2d_case(1, 2);
  EXPECT_EQ(h1, (std::vector<Integer>{0, 0}));
  const auto h3 = metric2d_case(3, 3);
  EXPECT_EQ(h3[2], 1);
  EXPECT_EQ(h3[3], 1);
  EXPECT_THROW(metric2d_case(5, 1), Error);
}

TEST(Distribution, StrataAndInvariants) {
  const DistributionReport rep = distribution_example(1);
  ASSERT_EQ(rep.strata.size(), 3u);
  EXPECT_EQ(rep.strata[0].rank, 2);
  EXPECT_EQ(rep.strata[0].invariants, 1);
  EXPECT_EQ(rep.strata[1].rank, 2);
  EXPECT_EQ(rep.strata[1].invariants, 0);
  EXPECT_EQ(rep.strata[2].rank, 0);
  EXPECT_EQ(rep.strata[2].invariants, 1);
  ASSERT_EQ(rep.checks.size(), 3u);
  EXPECT_TRUE(rep.checks[0].annihilated);   // t - s^2/r
  EXPECT_FALSE(rep.checks[1].annihilated);  // candidate t - s^2/t
  EXPECT_TRUE(rep.checks[2].annihilated);   // t on r = s = 0
}

TEST(Scenario, ParseErrors) {
  auto code = [](const std::string& text) {
    try {
      parse_scenario(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::unsupported_argument;
  };
  EXPECT_EQ(code("not json"), Errc::invalid_scenario);
  EXPECT_EQ(code(R"({"schema":"other","version":1})"), Errc::invalid_scenario);
  const std::string head = R"({"schema":"poincare-scenario","version":1,"name":"t","base":["x"],"fiber":["u"],)";
  EXPECT_EQ(code(head + R"("generators":[],"strata":[{"label":"a","equalities":["u_9"]}]})"), Errc::invalid_scenario);
  EXPECT_EQ(code(head + R"("generators":[],"strata":[{"label":"a","equalities":["u_1"],"inequations":["u_1"]}]})"),
            Errc::invalid_scenario);
  EXPECT_EQ(code(head + R"("generators":[],"strata":[],"invariants":[{"name":"i","stratum":"zz","expr":"u"}]})"),
            Errc::invalid_scenario);
  const Scenario ok = parse_scenario(head + R"("generators":[{"name":"d/x","components":{"x":"1"}}],)" +
                                     R"("strata":[{"label":"all"}]})");
  const auto rep = run_scenario(ok, 3, 1);
  EXPECT_EQ(rep.strata[0].h, (std::vector<Integer>{1, 1, 1, 1}));
}

TEST(Scenario, NonlinearGeneratorRejected) {
  const std::string text = R"({"schema":"poincare-scenario","version":1,"name":"t","base":["x"],"fiber":["u"],)"
                           R"("generators":[{"name":"g","functions":["f"],"components":{"x":"f*f"}}],"strata":[]})";
  const Scenario sc = parse_scenario(text);
  try {
    ProlongedFamily fam(sc, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_scenario);
  }
}

TEST(FitTail, ConstantTail) {
  const HilbertSpec s = fit_constant_tail({0, 1, 0, 1, 1, 1});
  EXPECT_EQ(gf_from_hilbert(s), parse_rational_function("(z-z^2+z^3)/(1-z)"));
  EXPECT_THROW(fit_constant_tail({0, 1, 2, 3}), Error);
}
