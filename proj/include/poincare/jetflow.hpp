#pragma once

#include <future>
#include <optional>
#include <string>
#include <vector>

#include "poincare/hilbert.hpp"
#include "poincare/jet/scenario.hpp"
#include "poincare/jet/scenario_data.hpp"

namespace poincare::jet {

inline const Scenario& lie_example_scenario() {
  static const Scenario s = parse_scenario(kLieExampleJson);
  return s;
}

inline const Scenario& metric2d_scenario() {
  static const Scenario s = parse_scenario(kMetric2dJson);
  return s;
}

inline const Scenario& distribution_scenario() {
  static const Scenario s = parse_scenario(kDistributionJson);
  return s;
}

/// Spec with a constant tail: the smallest onset from which h[] is constant
/// for at least `min_run` values up to the horizon. Finite-horizon evidence
/// only.
inline HilbertSpec fit_constant_tail(const std::vector<Integer>& h, int min_run = 3) {
  const int n = static_cast<int>(h.size());
  int onset = n - 1;
  while (onset > 0 && h[static_cast<std::size_t>(onset) - 1] == h.back()) --onset;
  if (n - onset < min_run)
    throw Error(Errc::horizon_too_short, "fewer than " + std::to_string(min_run) + " equal trailing values");
  std::map<int, Integer> ex;
  for (int k = 0; k < onset; ++k) ex[k] = h[static_cast<std::size_t>(k)];
  return HilbertSpec(std::move(ex), onset, Polynomial(Rational(h.back())));
}

struct StratumRow {
  std::string label;
  std::vector<Integer> h;  // k = 0..k_max
  HilbertSpec fit;
  RationalFunction poincare;
  bool analytic = false;
  std::string note;
};

/// Sigma0..Sigma6 by rank counting to order k_max plus the analytic
/// Sigma_infinity row (only base translations remain, h_k = 1 for k >= 1).
inline std::vector<StratumRow> lie_example_table(int k_max = 7, std::uint64_t seed = 1, unsigned jobs = 1) {
  const Scenario& sc = lie_example_scenario();
  const ProlongedFamily fam(sc, k_max);
  std::vector<StratumRow> rows(sc.strata.size());
  auto work = [&](std::size_t i) {
    const CodimSequence c = stratum_codim_sequence(sc, fam, sc.strata[i], k_max, seed);
    StratumRow& r = rows[i];
    r.label = c.label;
    r.h = c.h;
    r.fit = fit_constant_tail(c.h);
    r.poincare = gf_from_hilbert(r.fit);
    r.note = "verified to k=" + std::to_string(k_max) + " only";
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) work(i);
  } else {
    std::vector<std::future<void>> fs;
    for (std::size_t i = 0; i < rows.size(); ++i) fs.push_back(std::async(std::launch::async, work, i));
    for (auto& f : fs) f.get();
  }
  StratumRow inf;
  inf.label = "SigmaInf";
  for (int k = 0; k <= k_max; ++k) inf.h.emplace_back(k == 0 ? 0 : 1);
  inf.fit = HilbertSpec({}, 1, Polynomial(1));
  inf.poincare = gf_from_hilbert(inf.fit);
  inf.analytic = true;
  inf.note = "analytic: u_01, u_02, ... are invariant";
  rows.push_back(std::move(inf));
  return rows;
}

/// h_0..h_{k_max} for plane metrics under diffeomorphisms by rank counting.
inline std::vector<Integer> metric2d_case(int k_max, std::uint64_t seed = 1) {
  if (k_max < 0 || k_max > 4) throw Error(Errc::unsupported_argument, "metric2d supports k_max in [0, 4]");
  const Scenario& sc = metric2d_scenario();
  const ProlongedFamily fam(sc, k_max);
  return stratum_codim_sequence(sc, fam, sc.strata.front(), k_max, seed).h;
}

struct DistributionStratum {
  std::string label;
  int stratum_dim = 0;
  int rank = 0;
  int invariants = 0;
};

struct InvariantCheck {
  std::string name;
  std::string stratum;
  std::string expr;
  bool expect = true;
  bool annihilated = false;
};

struct DistributionReport {
  std::vector<DistributionStratum> strata;
  std::vector<InvariantCheck> checks;
};

inline DistributionReport distribution_example(std::uint64_t seed = 1) {
  const Scenario& sc = distribution_scenario();
  const ProlongedFamily fam(sc, 0);
  DistributionReport rep;
  for (const auto& st : sc.strata) {
    const CodimSequence c = stratum_codim_sequence(sc, fam, st, 0, seed);
    rep.strata.push_back({st.label, c.stratum_dim[0], c.rank[0], static_cast<int>(c.s[0].get_si())});
  }
  for (const auto& iv : sc.invariants)
    rep.checks.push_back({iv.name, iv.stratum, iv.expr, iv.expect,
                          annihilation_check(sc, iv.expr, sc.stratum(iv.stratum), seed)});
  return rep;
}

/// Runs every stratum and candidate invariant of a scenario.
struct ScenarioReport {
  std::vector<CodimSequence> strata;
  std::vector<InvariantCheck> checks;
};

inline ScenarioReport run_scenario(const Scenario& sc, int k_max, std::uint64_t seed) {
  ScenarioReport rep;
  if (!sc.strata.empty()) {
    const ProlongedFamily fam(sc, k_max);
    for (const auto& st : sc.strata) rep.strata.push_back(stratum_codim_sequence(sc, fam, st, k_max, seed));
  }
  for (const auto& iv : sc.invariants)
    rep.checks.push_back({iv.name, iv.stratum, iv.expr, iv.expect,
                          annihilation_check(sc, iv.expr, sc.stratum(iv.stratum), seed)});
  return rep;
}

}  // namespace poincare::jet
