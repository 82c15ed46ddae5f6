#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "poincare/hilbert.hpp"

namespace poincare {

/// dim S^k T* = C(n+k-1, k)
inline Integer dim_sym(long n, long k) { return binomial(n + k - 1, k); }

/// n C(n+k, k), the cumulative count including the order-0 block.
inline Integer dim_diff_group(long n, long k) { return n * binomial(n + k, k); }

/// dim S^k T* (x) T = n C(n+k-1, k)
inline Integer dim_delta(long n, long k) { return n * binomial(n + k - 1, k); }

/// t0 - t1 + t2 - ... (no clamping).
inline Integer euler_symbol_dim(std::span<const Integer> terms) {
  if (terms.empty()) throw Error(Errc::unsupported_argument, "empty complex");
  Integer acc = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) acc += i % 2 == 0 ? terms[i] : -terms[i];
  return acc;
}

inline Integer euler_symbol_dim(std::initializer_list<Integer> terms) {
  return euler_symbol_dim(std::span<const Integer>(terms.begin(), terms.size()));
}

enum class SymbolProfile { orthogonal, conformal_orth, complex_gl, projective_chain, acs2_tilde };

inline SymbolProfile parse_symbol_profile(std::string_view name) {
  if (name == "orthogonal") return SymbolProfile::orthogonal;
  if (name == "conformal-orth") return SymbolProfile::conformal_orth;
  if (name == "complex-gl") return SymbolProfile::complex_gl;
  if (name == "projective-chain") return SymbolProfile::projective_chain;
  if (name == "acs2-tilde") return SymbolProfile::acs2_tilde;
  throw Error(Errc::unknown_symbol, "unknown symbol profile '" + std::string(name) + "'");
}

/// Prolongation dimensions of the named symbols. complex-gl at k returns
/// dim g_{k+1} = 2n C(n+k, k+1); the others return dim g_k.
inline Integer symbol_dim_profile(SymbolProfile profile, long n, long k) {
  if (k < 0) throw Error(Errc::unsupported_argument, "negative order");
  switch (profile) {
    case SymbolProfile::orthogonal:
      return k == 0 ? Integer(n) : k == 1 ? binomial(n, 2) : Integer(0);
    case SymbolProfile::conformal_orth:
      return k == 0 ? Integer(n) : k == 1 ? binomial(n, 2) + 1 : k == 2 ? Integer(n) : Integer(0);
    case SymbolProfile::complex_gl:
      return 2 * n * binomial(n + k, k + 1);
    case SymbolProfile::projective_chain:
      return k == 0 ? Integer(n) : k == 1 ? Integer(n * n) : k == 2 ? Integer(n) : Integer(0);
    case SymbolProfile::acs2_tilde:
      if (k == 0) throw Error(Errc::unsupported_argument, "acs2-tilde is defined from k = 1");
      return k == 1 ? 4 : 2;
  }
  throw Error(Errc::unknown_symbol, "unknown symbol profile");
}

inline Integer symbol_dim_profile(std::string_view name, long n, long k) {
  return symbol_dim_profile(parse_symbol_profile(name), n, k);
}

/// Generic orbit count
///   h(k) = symbol_dim(k) - group_fiber(k + r) + stabilizer_dim(k) - stabilizer_dim(k - 1)
/// with explicit overrides for exceptional rows. stabilizer_dim is queried from
/// k = -1 on; its value there is the stabilizer of the lower-order part.
struct CountingPlan {
  std::string name;
  long n = 0;
  int base_dim = 0;
  int action_order = 1;
  std::function<Integer(long)> symbol_dim;
  std::function<Integer(long)> group_fiber;
  std::function<Integer(long)> stabilizer_dim;
  std::map<int, Integer> overrides;

  Integer row(int k) const {
    if (auto it = overrides.find(k); it != overrides.end()) return it->second;
    const Integer fiber = group_fiber ? group_fiber(k + action_order) : dim_delta(n, k + action_order);
    const Integer st = stabilizer_dim ? stabilizer_dim(k) - stabilizer_dim(k - 1) : Integer(0);
    return symbol_dim(k) - fiber + st;
  }
};

/// Evaluates the plan for k = 0..horizon and packages the values as a
/// HilbertSpec whose tail has degree < base_dim.
inline HilbertSpec assemble_hilbert(const CountingPlan& plan, int horizon = 60) {
  std::vector<Rational> values;
  for (int k = 0; k <= horizon; ++k) {
    const Integer h = plan.row(k);
    if (h < 0)
      throw Error(Errc::inconsistent_plan,
                  plan.name + ": negative count " + to_string(h) + " at k=" + std::to_string(k));
    values.emplace_back(h);
  }
  for (int d = 0; d <= plan.base_dim; ++d) {
    try {
      return spec_from_values(values, d, horizon - d - 5);
    } catch (const Error& e) {
      if (e.code() != Errc::horizon_too_short) throw;
    }
  }
  throw Error(Errc::horizon_too_short, plan.name + ": no polynomial tail of degree < base_dim within the horizon");
}

namespace plans {

inline void require(bool ok, std::string_view id, long n, std::string_view rule) {
  if (!ok)
    throw Error(Errc::out_of_validity, std::string(id) + " plan needs " + std::string(rule) + ", got n=" +
                                           std::to_string(n));
}

/// Builds St from a table of values at k = -1, 0, 1, ... and a tail for the rest.
inline std::function<Integer(long)> table(std::vector<Integer> from_minus_one,
                                          std::function<Integer(long)> rest = [](long) { return Integer(0); }) {
  return [v = std::move(from_minus_one), rest = std::move(rest)](long k) -> Integer {
    const long i = k + 1;
    return i < static_cast<long>(v.size()) ? v[static_cast<std::size_t>(i)] : rest(k);
  };
}

inline CountingPlan linear_connections(long n) {
  require(n >= 2, "linear-connections", n, "n >= 2");
  CountingPlan p{"linear-connections", n, static_cast<int>(n), 2, {}, {}, {}, {}};
  p.symbol_dim = [n](long k) -> Integer { return n * n * n * dim_sym(n, k); };
  // torsion has a unique nonzero orbit when n = 2; its 2-dimensional stabilizer dies in 1-jets
  p.stabilizer_dim = n == 2 ? table({4, 2}) : table({n * n});
  return p;
}

inline CountingPlan symmetric_connections(long n) {
  require(n >= 2, "symmetric-connections", n, "n >= 2");
  CountingPlan p{"symmetric-connections", n, static_cast<int>(n), 2, {}, {}, {}, {}};
  p.symbol_dim = [n](long k) -> Integer { return n * binomial(n + 1, 2) * dim_sym(n, k); };
  p.stabilizer_dim = table({n * n, n * n, kronecker(n, 2)});
  return p;
}

inline CountingPlan metric_connections(long n) {
  require(n >= 2, "metric-connections", n, "n >= 2");
  CountingPlan p{"metric-connections", n, static_cast<int>(n), 2, {}, {}, {}, {}};
  p.symbol_dim = [n](long k) -> Integer {
    if (k == 0) return Integer(n * (n * n + 1) / 2);
    return binomial(n + 1, 2) * binomial(n + k, k + 1) + Integer(n * n * (n - 1) / 2) * dim_sym(n, k);
  };
  // at k = 0 only the metric part is normalized by the full linear group
  p.overrides[0] = Integer(n * (n * n + 1) / 2) - dim_delta(n, 1);
  return p;
}

inline CountingPlan fedosov(long n) {
  require(n >= 1, "fedosov", n, "n >= 1");
  const long N = 2 * n;
  CountingPlan p{"fedosov", n, static_cast<int>(N), 3, {}, {}, {}, {}};
  p.symbol_dim = [N](long k) -> Integer { return binomial(N + 2, 3) * dim_sym(N, k); };
  p.group_fiber = [N](long j) -> Integer { return dim_sym(N, j); };  // Hamiltonian generating functions
  p.stabilizer_dim = table({binomial(N + 1, 2), binomial(N + 1, 2), kronecker(n, 1)});
  return p;
}

inline CountingPlan projective_connections(long n) {
  require(n >= 2, "projective-connections", n, "n >= 2");
  CountingPlan p{"projective-connections", n, static_cast<int>(n), 2, {}, {}, {}, {}};
  p.symbol_dim = [n](long k) -> Integer { return Integer((n - 1) * n * (n + 2) / 2) * dim_sym(n, k); };
  p.stabilizer_dim = n == 2 ? table({4, 6, 6, 4}) : table({n * n, n * n + n, n});
  return p;
}

inline Integer weyl_symbol(long n, long k) {
  const Integer c = binomial(n + 1, 2) - 1;
  if (k == 0) return c + n * binomial(n + 1, 2);
  return c * binomial(n + k, k + 1) + n * dim_sym(n, k);
}

inline CountingPlan weyl(long n) {
  require(n >= 2, "weyl", n, "n >= 2");
  CountingPlan p{"weyl", n, static_cast<int>(n), 2, {}, {}, {}, {}};
  p.symbol_dim = [n](long k) -> Integer { return weyl_symbol(n, k); };
  p.stabilizer_dim = table({n * n, binomial(n, 2) + 1, kronecker(n, 2)});
  return p;
}

inline CountingPlan einstein_weyl(long n) {
  require(n >= 3, "einstein-weyl", n, "n >= 3");
  CountingPlan p{"einstein-weyl", n, static_cast<int>(n), 2, {}, {}, {}, {}};
  p.symbol_dim = [n](long k) -> Integer {
    // r_j = (C(n+1,2) - 1) C(n+j-1, j) equations of order j
    const Integer r = k >= 1 ? (binomial(n + 1, 2) - 1) * dim_sym(n, k - 1) : Integer(0);
    return weyl_symbol(n, k) - r;
  };
  p.stabilizer_dim = table({n * n, binomial(n, 2) + 1, kronecker(n, 3)});
  return p;
}

inline CountingPlan einstein(long n) {
  require(n >= 4, "einstein", n, "n >= 4");
  CountingPlan p{"einstein", n, static_cast<int>(n), 1, {}, {}, {}, {}};
  p.symbol_dim = [n](long k) -> Integer {
    const Integer m = binomial(n + 1, 2);
    // metric jets, minus Einstein equations, plus Bianchi syzygies
    Integer g = euler_symbol_dim({binomial(n + k - 1, k) * m, k >= 2 ? binomial(n + k - 3, k - 2) * m : Integer(0),
                                  k >= 3 ? binomial(n + k - 4, k - 3) * n : Integer(0)});
    if (k == 2) g += 1;  // the constant Lambda
    return g;
  };
  p.stabilizer_dim = table({0, binomial(n, 2), binomial(n, 2)});
  return p;
}

inline CountingPlan almost_complex(long n) {
  require(n >= 2, "almost-complex", n, "n >= 2");
  const long N = 2 * n;
  CountingPlan p{"almost-complex", n, static_cast<int>(N), 1, {}, {}, {}, {}};
  p.symbol_dim = [n, N](long k) -> Integer { return 2 * n * n * dim_sym(N, k); };
  p.group_fiber = [N](long j) -> Integer { return dim_delta(N, j); };
  if (n == 2) {
    p.stabilizer_dim = table({0, 8, 16}, [](long k) -> Integer { return 4 * binomial(k + 2, k + 1) + 2; });
  } else {
    p.stabilizer_dim = [n](long k) -> Integer {
      if (k < 0) return 0;
      Integer s = symbol_dim_profile(SymbolProfile::complex_gl, n, k);
      if (n == 3 && k == 1) s += 2;
      return s;
    };
  }
  return p;
}

}  // namespace plans

inline const std::vector<std::string>& plan_ids() {
  static const std::vector<std::string> ids{"linear-connections", "symmetric-connections", "metric-connections",
                                            "fedosov",            "projective-connections", "weyl",
                                            "einstein-weyl",      "einstein",               "almost-complex"};
  return ids;
}

inline CountingPlan make_plan(std::string_view id, long n) {
  if (id == "linear-connections") return plans::linear_connections(n);
  if (id == "symmetric-connections") return plans::symmetric_connections(n);
  if (id == "metric-connections") return plans::metric_connections(n);
  if (id == "fedosov") return plans::fedosov(n);
  if (id == "projective-connections") return plans::projective_connections(n);
  if (id == "weyl") return plans::weyl(n);
  if (id == "einstein-weyl") return plans::einstein_weyl(n);
  if (id == "einstein") return plans::einstein(n);
  if (id == "almost-complex") return plans::almost_complex(n);
  throw Error(Errc::unknown_entry, "no counting plan for '" + std::string(id) + "'");
}

}  // namespace poincare
