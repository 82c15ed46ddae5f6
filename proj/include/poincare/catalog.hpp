#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "poincare/analysis.hpp"
#include "poincare/catalog_data.hpp"
#include "poincare/hilbert.hpp"

namespace poincare {

using Params = std::map<std::string, long>;

inline std::string to_string(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : ", ") + k + "=" + std::to_string(v);
  return s;
}

struct ParamSpec {
  std::string name;
  long min = 0;
  std::optional<long> max;
  long fallback = 0;
};

struct Display {
  Params params;
  std::string expr;
  std::string note;
};

struct EntryInfo {
  std::string id;
  std::string title;
  std::string group;
  std::string formula;
  std::string base_dim_expr;
  std::vector<ParamSpec> params;
  bool pr_form = false;
  bool has_hilbert = false;
  std::vector<std::string> flags;
  std::map<long, std::string> degenerate;
  std::vector<Display> displays;

  bool has_flag(std::string_view f) const { return std::find(flags.begin(), flags.end(), f) != flags.end(); }
};

struct Alias {
  std::string alias;
  std::string id;
  Params params;
};

struct Identity {
  std::string lhs_id;
  Params lhs;
  std::string rhs_id;
  Params rhs;
  std::string relation;
  std::string over;
};

namespace formulas {

using RF = RationalFunction;
inline Integer C(long m, long k) { return binomial(m, k); }
inline Integer d(long a, long b) { return kronecker(a, b); }
inline RF z() { return RF::z(); }
inline RF w() { return RF(one_minus_z()); }  // 1 - z
inline RF c(long v) { return RF(v); }
inline RF c(const Integer& v) { return RF(v); }
inline RF c(const Rational& v) { return RF(v); }
inline Integer exact(const Rational& q) { return to_integer(q); }
inline Rational q(long a, long b) { return Rational(a) / b; }

using HFn = std::function<Integer(int)>;

struct Formula {
  std::function<HFn(long n)> h;  // empty when the entry carries P only
  int tail_start = 0;            // first k of the generic h_k expression (may depend on n via tail_start_fn)
  std::function<int(long n)> tail_start_fn;
  std::function<RF(const Params&)> poincare;
};

inline Integer riemannian_h(long n, int k) {
  if (n == 2) return k < 2 ? 0 : k < 4 ? 1 : k - 1;
  if (k < 2) return 0;
  if (k == 2) return exact(q(1, 2) * C(n, 3) * (n + 3));
  return C(n + 1, 2) * C(n + k - 1, k) - n * C(n + k, k + 1);
}

inline RF riemannian_p(long n) {
  if (n == 2) return z().pow(2) * RF(Polynomial{1, -1, 2, -1}) / w().pow(2);
  return c(n) / z() + c(C(n, 2)) * (RF(1) - z().pow(2)) - (c(n) / z() - c(C(n + 1, 2))) / w().pow(n);
}

inline Integer einstein_h(long n, int k) {
  if (n < 4) return k == 2 ? 1 : 0;
  if (k < 2) return 0;
  if (k == 2) return exact(q(1, 12) * (n * n - 1) * (n * n - 12));
  return exact(Rational((k - 1) * n * (n + k - 1) * (n + 2 * k - 2)) / Rational(2 * (k + 1) * (n - 2)) *
               C(n + k - 4, k));
}

inline RF einstein_p(long n) {
  if (n < 4) return z().pow(2);
  return c(n) * (z() + RF(1)) * (c(n + 1) * z() - c(2) * (z().pow(2) + RF(1))) / (c(2) * z() * w().pow(n - 1)) -
         c(C(n, 2)) * (z().pow(2) - RF(1)) + c(n) / z() + z().pow(2);
}

inline Integer kaehler_h(long n, int k) {
  if (n == 1) return riemannian_h(2, k);
  if (k < 2) return 0;
  if (k == 2) return exact(q(1, 4) * n * n * (n - 1) * (n + 3));
  return C(2 * n + k + 1, k + 2) - 2 * C(n + k + 1, k + 2) - 2 * n * C(n + k, k + 1);
}

inline RF kaehler_p(long n) {
  if (n == 1) return riemannian_p(2);
  return RF(1) / (z().pow(2) * w().pow(2 * n)) - c(2) * (z() * c(n) + RF(1)) / (z().pow(2) * w().pow(n)) +
         c(n * n) * (RF(1) - z().pow(2)) + (c(2 * n) * z() + RF(1)) / z().pow(2);
}

inline Integer hyper_kaehler_h(long n, int k) {
  if (k < 2) return 0;
  if (k == 2) return exact(q(1, 6) * n * (n + 3) * (2 * n - 1) * (2 * n + 1));
  Integer sum = 0;
  for (long i = 0; i <= n; ++i) sum += C(2 * n + k - i, k) * (n - i);
  return 2 * sum - C(2 * n + k + 1, k + 2) - 2 * C(n + k + 1, k + 2);
}

inline RF hyper_kaehler_p(long n) {
  return c(2 * n) / (z() * w().pow(2 * n + 1)) - c(3) / (z().pow(2) * w().pow(2 * n)) -
         c(n * (2 * n + 1)) * (z().pow(2) - RF(1)) + (c(4 * n) * z() + c(3)) / z().pow(2);
}

inline Integer linear_h(long n, int k) {
  if (n == 2) return k == 0 ? 0 : k == 1 ? 6 : 6 * k + 2;
  if (k == 0) return exact(q(1, 2) * n * n * (n - 3));
  return n * n * n * C(n + k - 1, k) - n * C(n + k + 1, k + 2);
}

inline RF linear_p(long n) {
  if (n == 2) return c(2) * z() * RF(Polynomial{3, 1, -1}) / w().pow(2);
  return c(n) * (c(n * n) * z().pow(2) - RF(1)) / (z().pow(2) * w().pow(n)) - c(n * n) +
         c(n) * (c(n) * z() + RF(1)) / z().pow(2);
}

inline Integer symmetric_h(long n, int k) {
  if (k == 0) return 0;
  if (k == 1) return exact(q(1, 3) * n * n * (n * n - 4)) + d(2, n);
  if (k == 2) return n * C(n + 1, 2) * C(n + 1, 2) - n * C(n + 3, 4) - d(2, n);
  return n * C(n + 1, 2) * C(n + k - 1, n - 1) - n * C(n + k + 1, n - 1);
}

inline RF symmetric_p(long n) {
  if (n == 2) return z() * RF(Polynomial{1, 5, -1, -1}) / w().pow(2);
  return (c(n * (n + 1)) * z().pow(2) - c(2)) * c(n) / (c(2) * z().pow(2) * w().pow(n)) - c(n * n) * z() +
         c(n) * (RF(1) + c(n) * z()) / z().pow(2);
}

inline Integer metric_h(long n, int k) {
  if (k == 0) return exact(q(n, 2) * (n - 1) * (n - 1));
  return exact(q(n * (n + 1), 2) * C(n + k, k + 1) + q(n * n * (n - 1), 2) * C(n + k - 1, k)) -
         n * C(n + k + 1, k + 2);
}

inline RF metric_p(long n) {
  return (c(n) - c(C(n, 2)) * (z().pow(2) - z())) / z().pow(2) -
         (c(2 * n) - c(n * (n + 1)) * z() - c(n * n * (n - 1)) * z().pow(2)) / (c(2) * z().pow(2) * w().pow(n));
}

inline long skew_torsion_st(long n) { return n == 3 ? 3 : n == 4 ? 3 : n == 5 ? 2 : 0; }

inline RF skew_torsion_p(long n) {
  return (c(n) - c(C(n, 2)) * (z().pow(2) - z())) / z().pow(2) -
         (c(n) - c(C(n + 1, 2)) * z() - c(C(n, 3)) * z().pow(2)) / (z().pow(2) * w().pow(n)) +
         c(skew_torsion_st(n)) * w();
}

inline Integer fedosov_h(long n, int k) {
  if (k == 0) return 0;
  if (k == 1) return exact(q(1, 2) * (n - 1) * n * (2 * n + 1) * (2 * n + 3)) + d(n, 1);
  if (k == 2) return exact(q(1, 5) * n * (n + 1) * (3 * n + 2) * (4 * n * n - 1)) - d(1, n);
  return C(2 * n + 2, 3) * C(2 * n + k - 1, k) - C(2 * n + k + 2, k + 3);
}

inline RF fedosov_p(long n) {
  if (n == 1) return z() * RF(Polynomial{1, 3, 0, -1}) / w().pow(2);
  return (c(2 * n * (2 * n * n + 3 * n + 1)) * z().pow(3) - c(3)) / (c(3) * z().pow(3) * w().pow(2 * n)) +
         (RF(1) + c(2 * n) * z() - c(n * (2 * n + 1)) * z().pow(2) * (z().pow(2) - RF(1))) / z().pow(3);
}

inline Integer projective_h(long n, int k) {
  if (n == 2) return k < 4 ? 0 : 2 * (k - 1);
  if (k == 0) return 0;
  if (k == 1) return exact(q(1, 3) * n * n * (n * n - 7));
  if (k == 2) return exact(q(n, 24) * (n - 2) * (5 * n * n * n + 16 * n * n + 15 * n + 12));
  return exact(q(n, 2) * (n - 1) * (n + 2) * C(n + k - 1, k)) - n * C(n + k + 1, k + 2);
}

inline RF projective_p(long n) {
  if (n == 2) return c(2) * z().pow(4) * RF(Polynomial{3, -2}) / w().pow(2);
  return c(n) / w().pow(n) * (c(C(n + 1, 2)) - (RF(1) + z().pow(2)) / z().pow(2)) -
         c(n) * (z().pow(2) + c(n) * z() - RF(1) - (c(n) * z() + RF(1)) / z().pow(2));
}

inline Integer conformal_h(long n, int k) {
  if (n == 3) return k < 3 ? 0 : k == 3 ? 1 : k == 4 ? 9 : k * k - 4;
  if (k < 2) return 0;
  if (k == 2) return exact(q(n * n * (n * n - 1), 12)) - n * n - 1;
  if (k == 3) return exact(q(1, 24) * n * (n * n * n * n + 2 * n * n * n - 5 * n * n - 14 * n - 32));
  return (C(n + 1, 2) - 1) * C(n + k - 1, k) - n * C(n + k, k + 1);
}

inline RF conformal_p(long n) {
  if (n == 3) return z().pow(3) * (RF(1) + z()) * RF(Polynomial{1, 5, -8, 3}) / w().pow(3);
  return (c((n + 1) * n) * z() - c(2) * (c(n) + z())) / (c(2) * z() * w().pow(n)) + c(n) / z() +
         (RF(1) + c(C(n, 2)) + c(n) * z()) * (RF(1) - z().pow(2));
}

inline Integer weyl_h(long n, int k) {
  if (k == 0) return 0;
  if (k == 1) return exact(q(1, 12) * (n * n - 4) * (n * n + 3)) + d(2, n);
  if (k == 2) return exact(q(1, 24) * n * (n * n - 1) * (n * n + 2 * n + 8)) - d(2, n);
  return (C(n + 1, 2) - 1) * C(n + k, k + 1) + n * C(n + k - 1, k) - n * C(n + k + 1, k + 2);
}

inline RF weyl_p(long n) {
  const Integer m = C(n + 1, 2) - 1;
  return (c(n) * z().pow(2) + c(m) * z() - c(n)) / (z().pow(2) * w().pow(n)) -
         (c(Integer(C(n, 2) + 1)) * z() * (z().pow(2) - RF(1)) - c(n)) / z().pow(2) - c(d(2, n)) * z() * (z() - RF(1));
}

inline Integer einstein_weyl_h(long n, int k) {
  if (k == 0) return 0;
  if (k == 1) return exact(q(1, 12) * (n - 3) * n * (n + 1) * (n + 2)) + d(n, 3);
  if (k == 2) return exact(q(1, 24) * n * (n - 1) * (n - 2) * (n * n + 5 * n + 8)) - d(n, 3);
  return (C(n + 1, 2) - 1) * C(n + k, k + 1) + n * C(n + k - 1, k) - (C(n + 1, 2) - 1) * C(n + k - 2, k - 1) -
         n * C(n + k + 1, k + 2);
}

inline RF einstein_weyl_p(long n) {
  if (n == 3) return z() * RF(Polynomial{1, 5, -1, -1}) / w().pow(2);
  const Integer m = C(n + 1, 2) - 1;
  return (c(n) * z().pow(2) - c(m) * z() * (z().pow(2) - RF(1)) - c(n)) / (z().pow(2) * w().pow(n)) -
         (c(Integer(C(n, 2) + 1)) * z() * (z().pow(2) - RF(1)) - c(n)) / z().pow(2);
}

inline Integer almost_complex_h(long n, int k) {
  if (n == 2) return k < 2 ? Integer(0) : k == 2 ? Integer(2) : Integer(8 * C(k + 3, k) - 4 * C(k + 4, k + 1) + 4);
  if (k == 0) return 0;
  return 2 * n * n * C(2 * n + k - 1, k) - 2 * n * C(2 * n + k, k + 1) + 2 * n * C(n + k, k + 1) -
         2 * n * C(n + k - 1, k) + 2 * (d(k, 1) - d(k, 2)) * d(n, 3);
}

inline RF almost_complex_p(long n) {
  if (n == 2) return c(2) * z().pow(2) * RF(Polynomial{1, 8, -12, 6, -1}) / w().pow(4);
  if (n == 3) return c(2) * z() * RF(Polynomial{1, 26, -36, 10, 17, -18, 7, -1}) / w().pow(6);
  return c(2 * n) * (c(n) * z() - RF(1)) / (z() * w().pow(2 * n)) + c(2 * n) / (z() * w().pow(n - 1)) + c(2 * n);
}

inline RF poincare_dulac_p(const Params& p) {
  const long m = p.at("m");
  switch (p.at("case")) {
    case 1: return c(2) * z();
    case 2: return z() + z().pow(m);
    case 3: {
      const long s = p.at("p") + p.at("q");
      return z() + z().pow(s + 1) + z().pow(2 * s + 1);
    }
    case 4: return (z() - z().pow(m + 1)) / w() + z().pow(2 * m + 1);
    default: return RF(Polynomial{1, 1, 1, 0, -1}) * z().pow(2) / RF(Polynomial{1, 0, 0, -1});
  }
}

inline const std::map<std::string, Formula>& registry() {
  static const std::map<std::string, Formula> table = [] {
    std::map<std::string, Formula> t;
    auto by_n = [](RF (*p)(long)) { return [p](const Params& ps) { return p(ps.at("n")); }; };
    auto h_of = [](Integer (*h)(long, int)) { return [h](long n) -> HFn { return [h, n](int k) { return h(n, k); }; }; };
    auto fixed = [](HFn h) { return [h](long) { return h; }; };
    t["ode-general"] = {fixed([](int k) -> Integer { return k < 5 ? Integer(0) : k == 5 ? Integer(3) : C(k, 2) - 4; }),
                        6, {}, [](const Params&) { return RF(Polynomial{0, 0, 0, 0, 0, 3, 2, -7, 3}) / w().pow(3); }};
    t["ode-cubic"] = {fixed([](int k) -> Integer { return k < 4 ? 0 : 2 * (k - 1); }), 4, {},
                      [](const Params&) { return c(2) * z().pow(4) * RF(Polynomial{3, -2}) / w().pow(2); }};
    t["ode-lie-form"] = {fixed([](int k) -> Integer { return k < 4 ? 0 : k == 4 ? 2 : k - 1; }), 5, {},
                         [](const Params&) { return z().pow(4) * RF(Polynomial{2, 0, -1}) / w().pow(2); }};
    t["riemannian"] = {h_of(riemannian_h), 0, [](long n) { return n == 2 ? 4 : 3; }, by_n(riemannian_p)};
    t["einstein"] = {h_of(einstein_h), 3, {}, by_n(einstein_p)};
    t["self-dual-metrics"] = {
        fixed([](int k) -> Integer { return k < 2 ? Integer(0) : k == 2 ? Integer(9) : exact(q(k - 1, 6) * (k * k + 25 * k + 36)); }),
        3, {}, [](const Params&) { return z().pow(2) * RF(Polynomial{9, 4, -30, 24, -6}) / w().pow(4); }};
    t["kaehler"] = {h_of(kaehler_h), 0, [](long n) { return n == 1 ? 4 : 3; }, by_n(kaehler_p)};
    t["hyper-kaehler"] = {h_of(hyper_kaehler_h), 3, {}, by_n(hyper_kaehler_p)};
    t["linear-connections"] = {h_of(linear_h), 0, [](long n) { return n == 2 ? 2 : 1; }, by_n(linear_p)};
    t["symmetric-connections"] = {h_of(symmetric_h), 3, {}, by_n(symmetric_p)};
    t["metric-connections"] = {h_of(metric_h), 1, {}, by_n(metric_p)};
    t["metric-connections-skew-torsion"] = {{}, 0, {}, by_n(skew_torsion_p)};
    t["metrizable-connections"] = {[](long n) -> HFn { return [n](int k) { return riemannian_h(n, k + 1); }; }, 0,
                                   [](long n) { return n == 2 ? 3 : 2; },
                                   [](const Params& ps) { return riemannian_p(ps.at("n")) / z(); }};
    t["fedosov"] = {h_of(fedosov_h), 3, {}, by_n(fedosov_p)};
    t["projective-connections"] = {h_of(projective_h), 0, [](long n) { return n == 2 ? 4 : 3; }, by_n(projective_p)};
    t["conformal"] = {h_of(conformal_h), 0, [](long n) { return n == 3 ? 5 : 4; }, by_n(conformal_p)};
    t["weyl"] = {h_of(weyl_h), 3, {}, by_n(weyl_p)};
    t["einstein-weyl"] = {h_of(einstein_weyl_h), 3, {}, by_n(einstein_weyl_p)};
    t["self-dual-conformal"] = {
        fixed([](int k) -> Integer { return k < 2 ? 0 : k == 2 ? 1 : k == 3 ? 13 : 3 * k * k - 7; }), 4, {},
        [](const Params&) { return z().pow(2) * RF(Polynomial{1, 10, 5, -17, 7}) / w().pow(3); }};
    t["almost-complex"] = {h_of(almost_complex_h), 3, {}, by_n(almost_complex_p)};
    t["hamiltonian-critical"] = {{}, 0, {}, [](const Params& ps) {
                                   return RF(1) / RF(Polynomial{1, 0, -1}).pow(ps.at("n"));
                                 }};
    t["poincare-dulac"] = {{}, 0, {}, poincare_dulac_p};
    return t;
  }();
  return table;
}

}  // namespace formulas

/// Evaluates a base_dim expression such as "2*n" for the given parameters.
inline long eval_param_expression(std::string_view expr, const Params& params) {
  const Rational v = parse_expression<Rational>(
      expr,
      [&](const SymbolRef& s) -> Rational {
        auto it = params.find(s.name);
        if (s.indexed || it == params.end()) throw Error(Errc::parse_error, "unknown parameter '" + s.to_string() + "'");
        return Rational(it->second);
      },
      [](const Rational& b, int e) { return pow_int(b, e); });
  const Integer i = to_integer(v);
  if (!i.fits_slong_p()) throw Error(Errc::unsupported_argument, "parameter expression overflow");
  return i.get_si();
}

struct VerificationFinding {
  std::string kind;  // gf-mismatch, series-mismatch, h0-mismatch, pole-at-origin, pole-bound, non-PR-denominator, display-mismatch
  std::string message;
  std::optional<Mismatch> mismatch;
};

enum class VerificationStatus { match, mismatch, skipped };

inline std::string_view to_string(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::match: return "match";
    case VerificationStatus::mismatch: return "mismatch";
    case VerificationStatus::skipped: return "skipped";
  }
  return "unknown";
}

struct VerificationReport {
  std::string id;
  Params params;
  VerificationStatus status = VerificationStatus::match;
  int K = 0;
  int d = 0;
  long base_dim = 0;
  Rational sigma;
  std::vector<UnitPole> other_unit_poles;
  std::vector<VerificationFinding> findings;  // mismatches, or the reason for skipping
};

struct IdentityReport {
  std::string description;
  bool ok = false;
  std::string detail;
};

class Catalog {
 public:
  explicit Catalog(const nlohmann::json& doc) {
    if (doc.value("schema", "") != "poincare-catalog" || doc.value("version", 0) != 1)
      throw Error(Errc::invalid_spec, "unsupported catalog schema/version");
    for (const auto& e : doc.at("entries")) {
      EntryInfo info;
      info.id = e.at("id").get<std::string>();
      info.title = e.at("title").get<std::string>();
      info.group = e.at("group").get<std::string>();
      info.formula = e.value("formula", "");
      info.base_dim_expr = e.at("base_dim").get<std::string>();
      info.pr_form = e.at("pr_form").get<bool>();
      info.has_hilbert = e.at("hilbert").get<bool>();
      for (const auto& p : e.at("params")) {
        ParamSpec ps;
        ps.name = p.at("name").get<std::string>();
        ps.min = p.at("min").get<long>();
        if (p.contains("max")) ps.max = p.at("max").get<long>();
        ps.fallback = p.value("default", ps.min);
        info.params.push_back(ps);
      }
      if (e.contains("flags")) info.flags = e.at("flags").get<std::vector<std::string>>();
      if (e.contains("degenerate"))
        for (const auto& [k, v] : e.at("degenerate").items()) info.degenerate[std::stol(k)] = v.get<std::string>();
      if (e.contains("displays"))
        for (const auto& dsp : e.at("displays"))
          info.displays.push_back({dsp.at("params").get<Params>(), dsp.at("expr").get<std::string>(),
                                   dsp.value("note", "")});
      const auto& reg = formulas::registry();
      auto it = reg.find(info.id);
      if (it == reg.end()) throw Error(Errc::invalid_spec, "catalog entry without formula: " + info.id);
      if (static_cast<bool>(it->second.h) != info.has_hilbert)
        throw Error(Errc::invalid_spec, "hilbert flag disagrees with formula table for " + info.id);
      entries_.push_back(std::move(info));
    }
    for (const auto& a : doc.value("aliases", nlohmann::json::array()))
      aliases_.push_back({a.at("alias").get<std::string>(), a.at("id").get<std::string>(),
                          a.at("params").get<Params>()});
    for (const auto& i : doc.value("identities", nlohmann::json::array()))
      identities_.push_back({i.at("lhs").at("id").get<std::string>(), i.at("lhs").at("params").get<Params>(),
                             i.at("rhs").at("id").get<std::string>(), i.at("rhs").at("params").get<Params>(),
                             i.at("relation").get<std::string>(), i.value("over", "")});
  }

  static const Catalog& builtin() {
    static const Catalog c(nlohmann::json::parse(kCatalogJson));
    return c;
  }

  const std::vector<EntryInfo>& entries() const noexcept { return entries_; }
  const std::vector<Alias>& aliases() const noexcept { return aliases_; }
  const std::vector<Identity>& identities() const noexcept { return identities_; }

  /// Resolves aliases; the alias parameters override the given ones.
  std::pair<const EntryInfo*, Params> resolve(std::string_view id, Params params) const {
    for (const auto& a : aliases_)
      if (a.alias == id) {
        for (const auto& [k, v] : a.params) params[k] = v;
        return {&entry(a.id), params};
      }
    return {&entry(id), params};
  }

  const EntryInfo& entry(std::string_view id) const {
    for (const auto& e : entries_)
      if (e.id == id) return e;
    throw Error(Errc::unknown_entry, "unknown catalog entry '" + std::string(id) + "'");
  }

  /// Fills defaults and checks the validity range.
  Params validate(const EntryInfo& e, Params params) const {
    for (const auto& [k, v] : params) {
      const bool known = std::any_of(e.params.begin(), e.params.end(), [&](const ParamSpec& p) { return p.name == k; });
      if (!known) throw Error(Errc::out_of_validity, e.id + " has no parameter '" + k + "'");
    }
    for (const auto& p : e.params) {
      auto [it, inserted] = params.emplace(p.name, p.fallback);
      const long v = it->second;
      if (v < p.min || (p.max && v > *p.max))
        throw Error(Errc::out_of_validity, e.id + ": " + p.name + "=" + std::to_string(v) + " outside [" +
                                               std::to_string(p.min) + ", " +
                                               (p.max ? std::to_string(*p.max) : std::string("inf")) + "]");
    }
    if (e.id == "poincare-dulac" && params.at("case") == 2 && params.at("m") < 2)
      throw Error(Errc::out_of_validity, "poincare-dulac case 2 needs m > 1");
    return params;
  }

 private:
  std::vector<EntryInfo> entries_;
  std::vector<Alias> aliases_;
  std::vector<Identity> identities_;
};

inline const std::vector<EntryInfo>& list_entries() { return Catalog::builtin().entries(); }

inline long base_dim(std::string_view id, const Params& params = {}) {
  const auto& cat = Catalog::builtin();
  auto [e, ps] = cat.resolve(id, params);
  return eval_param_expression(e->base_dim_expr, cat.validate(*e, ps));
}

inline HilbertSpec hilbert_spec(std::string_view id, const Params& params = {}) {
  const auto& cat = Catalog::builtin();
  auto [e, raw] = cat.resolve(id, params);
  const Params ps = cat.validate(*e, raw);
  const auto& f = formulas::registry().at(e->id);
  if (!f.h) throw Error(Errc::no_hilbert_data, e->id + " carries only a Poincare function");
  const long n = ps.count("n") ? ps.at("n") : 0;
  const int k0 = f.tail_start_fn ? f.tail_start_fn(n) : f.tail_start;
  const long bd = eval_param_expression(e->base_dim_expr, ps);
  return spec_from_formula(f.h(n), k0, static_cast<int>(bd));
}

inline RationalFunction claimed_poincare(std::string_view id, const Params& params = {}) {
  const auto& cat = Catalog::builtin();
  auto [e, raw] = cat.resolve(id, params);
  return formulas::registry().at(e->id).poincare(cat.validate(*e, raw));
}

/// Checks the h_k data against the closed form (exact equality of rational
/// functions and of the first K+1 coefficients) and the pole structure.
inline VerificationReport verify_entry(const Catalog& cat, std::string_view id, const Params& params, int K) {
  auto [e, raw] = cat.resolve(id, params);
  VerificationReport r;
  r.id = e->id;
  r.params = cat.validate(*e, raw);
  r.K = K;
  r.base_dim = eval_param_expression(e->base_dim_expr, r.params);
  const RationalFunction p = formulas::registry().at(e->id).poincare(r.params);
  auto add = [&](std::string kind, std::string msg, std::optional<Mismatch> mm = std::nullopt) {
    r.findings.push_back({std::move(kind), std::move(msg), std::move(mm)});
  };
  if (p.den().coeff(0) == 0) {
    add("pole-at-origin", "claimed P has a pole at z = 0: " + p.to_string());
    r.status = VerificationStatus::mismatch;
    return r;
  }
  const PoleReport pr = analyze(p);
  r.d = pr.d;
  r.sigma = pr.sigma;
  r.other_unit_poles = pr.other_unit_poles;
  if (pr.d > r.base_dim)
    add("pole-bound", "pole order " + std::to_string(pr.d) + " exceeds base dimension " + std::to_string(r.base_dim));
  if (e->pr_form && !pr.conforms_to_PR) add("non-PR-denominator", "denominator is not a power of 1-z: " + p.to_string());
  for (const auto& dsp : e->displays) {
    const bool applies = std::all_of(dsp.params.begin(), dsp.params.end(), [&](const auto& kv) {
      auto it = r.params.find(kv.first);
      return it != r.params.end() && it->second == kv.second;
    });
    if (applies && parse_rational_function(dsp.expr) != p)
      add("display-mismatch", "display " + dsp.expr + " differs from " + p.to_string());
  }
  if (e->has_hilbert) {
    const HilbertSpec spec = hilbert_spec(e->id, r.params);
    const RationalFunction gf = gf_from_hilbert(spec);
    if (gf != p) add("gf-mismatch", "sum h_k z^k = " + gf.to_string() + " but P = " + p.to_string());
    const MatchReport m = equal_series(p, spec, K);
    if (!m.matched())
      add("series-mismatch", "first differing coefficient at k=" + std::to_string(m.first_mismatch->k),
          m.first_mismatch);
    if (coeff(p, 0) != Rational(spec(0)))
      add("h0-mismatch", "P(0) = " + to_string(coeff(p, 0)) + " but h_0 = " + to_string(spec(0)));
    r.status = r.findings.empty() ? VerificationStatus::match : VerificationStatus::mismatch;
  } else {
    r.status = r.findings.empty() ? VerificationStatus::skipped : VerificationStatus::mismatch;
    if (r.findings.empty()) add("no-hilbert-data", "series comparison skipped; pole structure checked");
  }
  return r;
}

inline VerificationReport verify_entry(std::string_view id, const Params& params, int K) {
  return verify_entry(Catalog::builtin(), id, params, K);
}

/// Parameter samples for verify_all: every valid n up to nmax, and a fixed
/// spread of the normal-form cases.
inline std::vector<Params> parameter_samples(const EntryInfo& e, long nmax) {
  if (e.id == "poincare-dulac") {
    return {{{"case", 1}},         {{"case", 2}, {"m", 2}}, {{"case", 2}, {"m", 3}}, {{"case", 2}, {"m", 5}},
            {{"case", 3}, {"p", 1}, {"q", 1}}, {{"case", 3}, {"p", 1}, {"q", 2}}, {{"case", 3}, {"p", 2}, {"q", 3}},
            {{"case", 4}, {"m", 1}}, {{"case", 4}, {"m", 2}}, {{"case", 4}, {"m", 3}}, {{"case", 5}}};
  }
  if (e.params.empty()) return {Params{}};
  const ParamSpec& p = e.params.front();
  std::vector<Params> out;
  const long hi = p.max ? std::min(*p.max, std::max(nmax, p.min)) : nmax;
  for (long n = p.min; n <= hi; ++n) out.push_back({{p.name, n}});
  return out;
}

/// verify_entry over all entries (or one) and their parameter samples, in
/// catalog order. jobs > 1 fans out over std::async; the output order does
/// not depend on scheduling.
inline std::vector<VerificationReport> verify_all(int K, long nmax, unsigned jobs = 1,
                                                  std::optional<std::string> only = std::nullopt) {
  std::vector<std::pair<std::string, Params>> work;
  const auto& cat = Catalog::builtin();
  if (only) {
    auto [e, ps] = cat.resolve(*only, {});
    if (!ps.empty()) {
      work.emplace_back(e->id, ps);
    } else {
      for (auto& p : parameter_samples(*e, nmax)) work.emplace_back(e->id, std::move(p));
    }
  } else {
    for (const auto& e : cat.entries())
      for (auto& p : parameter_samples(e, nmax)) work.emplace_back(e.id, std::move(p));
  }
  std::vector<VerificationReport> out(work.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < work.size(); ++i) out[i] = verify_entry(work[i].first, work[i].second, K);
    return out;
  }
  std::vector<std::future<void>> pending;
  std::atomic<std::size_t> next{0};
  for (unsigned t = 0; t < jobs; ++t)
    pending.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < work.size(); i = next++) out[i] = verify_entry(work[i].first, work[i].second, K);
    }));
  for (auto& f : pending) f.get();
  return out;
}

/// Cross-entry identities recorded in the catalog.
inline std::vector<IdentityReport> check_identities(long nmax) {
  std::vector<IdentityReport> out;
  for (const auto& idn : Catalog::builtin().identities()) {
    std::vector<long> sweep{0};
    if (!idn.over.empty()) {
      sweep.clear();
      const auto& lhs = Catalog::builtin().entry(idn.lhs_id);
      const auto& rhs = Catalog::builtin().entry(idn.rhs_id);
      auto lo = [&](const EntryInfo& e) {
        for (const auto& p : e.params)
          if (p.name == idn.over) return p.min;
        return 0L;
      };
      for (long v = std::max(lo(lhs), lo(rhs)); v <= nmax; ++v) sweep.push_back(v);
    }
    for (long v : sweep) {
      Params l = idn.lhs, r = idn.rhs;
      if (!idn.over.empty()) l[idn.over] = r[idn.over] = v;
      IdentityReport rep;
      rep.description = idn.lhs_id + (l.empty() ? "" : "(" + to_string(l) + ")") + " " + idn.relation + " " +
                        idn.rhs_id + (r.empty() ? "" : "(" + to_string(r) + ")");
      if (idn.relation == "equal-hilbert") {
        const HilbertSpec a = hilbert_spec(idn.lhs_id, l), b = hilbert_spec(idn.rhs_id, r);
        rep.ok = a == b;
        if (!rep.ok) rep.detail = a.to_string() + " vs " + b.to_string();
      } else {
        const RationalFunction a = claimed_poincare(idn.lhs_id, l);
        RationalFunction b = claimed_poincare(idn.rhs_id, r);
        if (idn.relation == "poincare-over-z") b = b / RationalFunction::z();
        rep.ok = a == b;
        if (!rep.ok) rep.detail = a.to_string() + " vs " + b.to_string();
      }
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace poincare
