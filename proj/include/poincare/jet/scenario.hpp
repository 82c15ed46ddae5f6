#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "poincare/jet/exact_rank.hpp"
#include "poincare/jet/prolong.hpp"

namespace poincare::jet {

/// Coordinates set to zero and coordinates required nonzero.
struct StratumCase {
  std::string label;
  std::vector<std::string> equalities;
  std::vector<std::string> inequations;
  std::string reference;  // optional expected P(z), informational
};

struct InvariantCase {
  std::string name;
  std::string stratum;
  std::string expr;
  bool expect = true;  // false for negative controls
};

/// Pseudogroup action on jets: jet space shape, generator families, strata
/// and candidate invariants. Base coordinates of sampled points are pinned at
/// the origin, which is no loss for actions transitive on the base.
struct Scenario {
  std::string name;
  std::string description;
  std::vector<std::string> base;
  std::vector<std::string> fiber;
  std::vector<ParamField> generators;
  std::vector<StratumCase> strata;
  std::vector<InvariantCase> invariants;
  std::vector<std::string> positive_definite;  // order-0 entries a, b, c of [[a, b], [b, c]]
  int max_order = 8;

  const StratumCase& stratum(std::string_view label) const {
    for (const auto& s : strata)
      if (s.label == label) return s;
    throw Error(Errc::invalid_scenario, "unknown stratum '" + std::string(label) + "'");
  }
};

inline Scenario scenario_from_json(const nlohmann::json& doc) {
  try {
    if (doc.value("schema", "") != "poincare-scenario" || doc.value("version", 0) != 1)
      throw Error(Errc::invalid_scenario, "unsupported scenario schema/version");
    Scenario s;
    s.name = doc.at("name").get<std::string>();
    s.description = doc.value("description", "");
    s.base = doc.at("base").get<std::vector<std::string>>();
    s.fiber = doc.at("fiber").get<std::vector<std::string>>();
    s.max_order = doc.value("max_order", 8);
    for (const auto& g : doc.at("generators")) {
      ParamField f;
      f.name = g.at("name").get<std::string>();
      f.functions = g.value("functions", std::vector<std::string>{});
      f.components = g.at("components").get<std::map<std::string, std::string>>();
      s.generators.push_back(std::move(f));
    }
    for (const auto& st : doc.value("strata", nlohmann::json::array())) {
      StratumCase c{st.at("label").get<std::string>(), st.value("equalities", std::vector<std::string>{}),
                    st.value("inequations", std::vector<std::string>{}), st.value("reference", "")};
      for (const auto& e : c.equalities)
        if (std::find(c.inequations.begin(), c.inequations.end(), e) != c.inequations.end())
          throw Error(Errc::invalid_scenario, "stratum " + c.label + " lists " + e + " as both zero and nonzero");
      s.strata.push_back(std::move(c));
    }
    for (const auto& iv : doc.value("invariants", nlohmann::json::array()))
      s.invariants.push_back({iv.at("name").get<std::string>(), iv.at("stratum").get<std::string>(),
                              iv.at("expr").get<std::string>(), iv.value("expect", true)});
    s.positive_definite = doc.value("positive_definite", std::vector<std::string>{});
    if (!s.positive_definite.empty() && s.positive_definite.size() != 3)
      throw Error(Errc::invalid_scenario, "positive_definite takes the three entries of a symmetric 2x2 matrix");
    // names must resolve in the jet space
    const JetSpace space(s.base, s.fiber, s.max_order);
    for (const auto& st : s.strata)
      for (const auto* list : {&st.equalities, &st.inequations})
        for (const auto& n : *list)
          if (space.find(n) < 0) throw Error(Errc::invalid_scenario, "stratum " + st.label + ": unknown coordinate " + n);
    for (const auto& iv : s.invariants) s.stratum(iv.stratum);
    for (const auto& n : s.positive_definite)
      if (space.find(n) < 0 || space.order_of(space.find(n)) != 0)
        throw Error(Errc::invalid_scenario, "positive_definite entry " + n + " is not an order-0 coordinate");
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_scenario, e.what());
  }
}

inline Scenario parse_scenario(std::string_view text) {
  try {
    return scenario_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::invalid_scenario, e.what());
  }
}

/// Basis fields with monomials of degree <= K + 2, prolonged to order K.
/// Orders k <= K reuse these prolongations since J^k is a prefix of J^K.
class ProlongedFamily {
 public:
  ProlongedFamily(const Scenario& sc, int K) : space_(sc.base, sc.fiber, K), K_(K) {
    if (K < 0) throw Error(Errc::unsupported_argument, "negative order");
    if (K > sc.max_order)
      throw Error(Errc::unsupported_argument, "order " + std::to_string(K) + " above the scenario limit " +
                                                  std::to_string(sc.max_order));
    const JetSpace order0(sc.base, sc.fiber, 0);
    basis_ = expand(sc.generators, order0, K + 2);
    // order-0 ids coincide with those of J^K
    for (const auto& b : basis_) prolonged_.push_back(prolong(b.field, space_));
  }

  const JetSpace& space() const noexcept { return space_; }
  int max_order() const noexcept { return K_; }
  const std::vector<BasisField>& basis() const noexcept { return basis_; }
  const std::vector<ProlongedField>& prolonged() const noexcept { return prolonged_; }

 private:
  JetSpace space_;
  int K_;
  std::vector<BasisField> basis_;
  std::vector<ProlongedField> prolonged_;
};

/// Rank of the order-k components of the basis fields with degree <=
/// param_cutoff at `point` (a point of J^k). Basis fields of degree
/// param_cutoff + 1 serve as sentinels and must give zero rows.
inline int orbit_rank(const ProlongedFamily& fam, std::span<const Rational> point, int k, int param_cutoff) {
  const JetSpace& sp = fam.space();
  if (k < 0 || k > fam.max_order()) throw Error(Errc::bad_point, "order " + std::to_string(k) + " not prolonged");
  const int n = sp.dim_at(k);
  if (static_cast<int>(point.size()) != n)
    throw Error(Errc::bad_point, "point has " + std::to_string(point.size()) + " coordinates, J^" + std::to_string(k) +
                                     " has " + std::to_string(n));
  std::vector<std::vector<Rational>> rows;
  for (std::size_t b = 0; b < fam.basis().size(); ++b) {
    const int deg = fam.basis()[b].degree;
    if (deg > param_cutoff + 1) continue;
    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) row.push_back(fam.prolonged()[b].components[static_cast<std::size_t>(c)].evaluate(point));
    if (deg == param_cutoff + 1) {
      if (std::any_of(row.begin(), row.end(), [](const Rational& v) { return v != 0; }))
        throw Error(Errc::unsupported_argument, "parameter cutoff " + std::to_string(param_cutoff) +
                                                    " too small at order " + std::to_string(k) + ": " +
                                                    fam.basis()[b].label + " acts");
      continue;
    }
    rows.push_back(std::move(row));
  }
  return exact_rank(rows);
}

/// Rank of explicit fields (already prolonged to the point's order).
inline int orbit_rank(const std::vector<ProlongedField>& fields, std::span<const Rational> point) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : fields) {
    if (f.components.size() != point.size()) throw Error(Errc::bad_point, "point does not match the field order");
    std::vector<Rational> row;
    for (const auto& c : f.components) row.push_back(c.evaluate(point));
    rows.push_back(std::move(row));
  }
  return exact_rank(rows);
}

/// Random point of the stratum in J^k: base at the origin, equalities 0,
/// other coordinates reduced fractions a/b with |a| <= 20, 1 <= b <= 20,
/// a != 0 for inequations; positive-definite order-0 blocks by rejection.
inline std::vector<Rational> sample_point(const Scenario& sc, const JetSpace& sp, const StratumCase& st, int k,
                                          std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 20);
  const int n = sp.dim_at(k);
  std::vector<int> kind(static_cast<std::size_t>(n), 0);  // 0 free, 1 zero, 2 nonzero
  for (const auto& e : st.equalities)
    if (int id = sp.find(e); id >= 0 && id < n) kind[static_cast<std::size_t>(id)] = 1;
  for (const auto& e : st.inequations)
    if (int id = sp.find(e); id >= 0 && id < n) kind[static_cast<std::size_t>(id)] = 2;
  auto draw = [&](bool nonzero) {
    int a = num(rng);
    while (nonzero && a == 0) a = num(rng);
    Rational q(a, den(rng));
    q.canonicalize();
    return q;
  };
  std::vector<Rational> pt(static_cast<std::size_t>(n));
  for (int id = sp.p(); id < n; ++id)
    if (kind[static_cast<std::size_t>(id)] != 1) pt[static_cast<std::size_t>(id)] = draw(kind[static_cast<std::size_t>(id)] == 2);
  if (!sc.positive_definite.empty()) {
    const int a = sp.find(sc.positive_definite[0]), b = sp.find(sc.positive_definite[1]),
              c = sp.find(sc.positive_definite[2]);
    for (int tries = 0;; ++tries) {
      const Rational& ga = pt[static_cast<std::size_t>(a)];
      const Rational& gb = pt[static_cast<std::size_t>(b)];
      const Rational& gc = pt[static_cast<std::size_t>(c)];
      if (ga > 0 && ga * gc - gb * gb > 0) break;
      if (tries > 10000) throw Error(Errc::bad_sample, "no positive-definite sample");
      for (int id : {a, b, c}) pt[static_cast<std::size_t>(id)] = draw(false);
    }
  }
  return pt;
}

struct CodimSequence {
  std::string label;
  std::vector<int> stratum_dim;  // per k
  std::vector<int> rank;
  std::vector<Integer> s;
  std::vector<Integer> h;
};

namespace detail {

inline void check_tangency(const ProlongedFamily& fam, const StratumCase& st, std::span<const Rational> pt, int k) {
  const JetSpace& sp = fam.space();
  for (const auto& e : st.equalities) {
    const int id = sp.find(e);
    if (id < 0 || id >= sp.dim_at(k)) continue;
    for (std::size_t b = 0; b < fam.basis().size(); ++b) {
      if (fam.basis()[b].degree > k + 1) continue;
      if (fam.prolonged()[b].components[static_cast<std::size_t>(id)].evaluate(pt) != 0)
        throw Error(Errc::invalid_scenario, "stratum " + st.label + " is not invariant: " + fam.basis()[b].label +
                                                " moves " + e + " at order " + std::to_string(k));
    }
  }
}

inline std::uint64_t label_hash(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

/// Independent stream per (seed, a, b).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  std::uint32_t w[2];
  seq.generate(w, w + 2);
  return (static_cast<std::uint64_t>(w[0]) << 32) | w[1];
}

}  // namespace detail

/// s_k = dim(stratum in J^k) - orbit rank, h_k = s_k - s_{k-1}, k = 0..k_max.
/// The orbit rank at each order is the maximum over three sampled points;
/// if the maximum is seen only once, three more points are drawn and the
/// maximum must then recur, else genericity-failure.
inline CodimSequence stratum_codim_sequence(const Scenario& sc, const ProlongedFamily& fam, const StratumCase& st,
                                            int k_max, std::uint64_t seed) {
  if (k_max < 0) throw Error(Errc::unsupported_argument, "negative k_max");
  if (k_max > fam.max_order()) throw Error(Errc::unsupported_argument, "family prolonged only to order " +
                                                                           std::to_string(fam.max_order()));
  const JetSpace& sp = fam.space();
  CodimSequence out;
  out.label = st.label;
  for (int k = 0; k <= k_max; ++k) {
    std::mt19937_64 rng(detail::mix_seed(seed, static_cast<std::uint64_t>(k), detail::label_hash(st.label)));
    std::vector<int> ranks;
    auto sample = [&] {
      const auto pt = sample_point(sc, sp, st, k, rng);
      detail::check_tangency(fam, st, pt, k);
      ranks.push_back(orbit_rank(fam, pt, k, k + 1));
    };
    for (int i = 0; i < 3; ++i) sample();
    auto best = [&] { return *std::max_element(ranks.begin(), ranks.end()); };
    if (std::count(ranks.begin(), ranks.end(), best()) < 2) {
      for (int i = 0; i < 3; ++i) sample();
      if (std::count(ranks.begin(), ranks.end(), best()) < 2)
        throw Error(Errc::genericity_failure, st.label + ": no stable generic rank at order " + std::to_string(k));
    }
    int zeros = 0;
    for (const auto& e : st.equalities)
      if (const int id = sp.find(e); id >= 0 && id < sp.dim_at(k)) ++zeros;
    const int dim = sp.dim_at(k) - zeros;
    out.stratum_dim.push_back(dim);
    out.rank.push_back(best());
    out.s.emplace_back(dim - best());
    out.h.push_back(k == 0 ? out.s[0] : out.s[static_cast<std::size_t>(k)] - out.s[static_cast<std::size_t>(k) - 1]);
  }
  return out;
}

struct AnnihilationResult {
  bool ok = true;
  int points = 0;
  int order = 0;
  std::string first_failure;  // basis field label when !ok
};

/// Checks X(I) = 0 for every basis field X (monomials up to degree k+1,
/// k the order of I) at `points` sampled stratum points. Points where the
/// denominator of I vanishes are redrawn; bad-sample if 50 draws in a row
/// all hit it.
inline AnnihilationResult annihilation_details(const Scenario& sc, std::string_view invariant,
                                               const StratumCase& st, std::uint64_t seed, int points = 20) {
  const JetSpace big(sc.base, sc.fiber, sc.max_order);
  const JetRational inv = parse_jet_rational(invariant, big);
  int k = 0;
  for (int v : inv.variables()) k = std::max(k, big.order_of(v));
  if (k + 1 > sc.max_order) throw Error(Errc::order_exceeded, "invariant order too high for the scenario");
  const ProlongedFamily fam(sc, k);
  const JetSpace& sp = fam.space();
  const std::set<int> var_set = inv.variables();
  const std::vector<int> vars(var_set.begin(), var_set.end());
  std::vector<JetPolynomial> dn, dd;
  for (int v : vars) {
    dn.push_back(inv.num.derivative(v));
    dd.push_back(inv.den.derivative(v));
  }
  AnnihilationResult res;
  res.order = k;
  std::mt19937_64 rng(detail::mix_seed(seed, 0xA11, detail::label_hash(st.label)));
  for (int p = 0; p < points; ++p) {
    std::vector<Rational> pt;
    Rational D;
    for (int tries = 0;; ++tries) {
      if (tries == 50) throw Error(Errc::bad_sample, "denominator of " + std::string(invariant) + " vanishes on " + st.label);
      pt = sample_point(sc, sp, st, k, rng);
      D = inv.den.evaluate(pt);
      if (D != 0) break;
    }
    detail::check_tangency(fam, st, pt, k);
    const Rational N = inv.num.evaluate(pt);
    std::vector<Rational> gn, gd;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      gn.push_back(dn[i].evaluate(pt));
      gd.push_back(dd[i].evaluate(pt));
    }
    for (std::size_t b = 0; b < fam.basis().size(); ++b) {
      if (fam.basis()[b].degree > k + 1) continue;
      Rational xn = 0, xd = 0;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        const Rational c = fam.prolonged()[b].components[static_cast<std::size_t>(vars[i])].evaluate(pt);
        xn += c * gn[i];
        xd += c * gd[i];
      }
      if (xn * D - N * xd != 0) {
        res.ok = false;
        res.first_failure = fam.basis()[b].label;
        res.points = p + 1;
        return res;
      }
    }
    res.points = p + 1;
  }
  return res;
}

inline bool annihilation_check(const Scenario& sc, std::string_view invariant, const StratumCase& st,
                               std::uint64_t seed) {
  return annihilation_details(sc, invariant, st, seed).ok;
}

}  // namespace poincare::jet
