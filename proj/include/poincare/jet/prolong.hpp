#pragma once

#include <map>
#include <string>
#include <vector>

#include "poincare/jet/jet_space.hpp"

namespace poincare::jet {

/// sum xi_i d/dx_i + sum phi_a d/du^a with coefficients in (x, u).
struct VectorField {
  std::vector<JetPolynomial> xi;   // p components
  std::vector<JetPolynomial> phi;  // q components
};

/// Components of X^(k) on every coordinate of J^k, indexed by coordinate id.
struct ProlongedField {
  std::vector<JetPolynomial> components;
};

/// Lie prolongation by the recursion
///   phi^{s+1_i} = D_i phi^s - sum_j u_{s+1_j} D_i xi_j
/// started from phi^0 = phi. Each u^a_s with |s| > 0 is reached from the
/// parent that lowers its first nonzero index.
inline ProlongedField prolong(const VectorField& field, const JetSpace& space) {
  if (static_cast<int>(field.xi.size()) != space.p() || static_cast<int>(field.phi.size()) != space.q())
    throw Error(Errc::invalid_scenario, "vector field does not match the jet space");
  for (const auto* part : {&field.xi, &field.phi})
    for (const auto& c : *part)
      for (int v : c.variables())
        if (space.order_of(v) > 0) throw Error(Errc::invalid_scenario, "field coefficients must not involve jets");
  ProlongedField out;
  out.components.resize(static_cast<std::size_t>(space.dim()));
  for (int i = 0; i < space.p(); ++i) out.components[static_cast<std::size_t>(i)] = field.xi[static_cast<std::size_t>(i)];
  std::vector<std::vector<JetPolynomial>> dxi(static_cast<std::size_t>(space.p()));
  for (int i = 0; i < space.p(); ++i)
    for (int j = 0; j < space.p(); ++j)
      dxi[static_cast<std::size_t>(i)].push_back(total_derivative(field.xi[static_cast<std::size_t>(j)], i, space));
  for (int id = space.p(); id < space.dim(); ++id) {
    const int a = space.alpha(id);
    MultiIndex s = space.sigma(id);
    if (degree(s) == 0) {
      out.components[static_cast<std::size_t>(id)] = field.phi[static_cast<std::size_t>(a)];
      continue;
    }
    int i = 0;
    while (s[static_cast<std::size_t>(i)] == 0) ++i;
    --s[static_cast<std::size_t>(i)];
    const int parent = space.id(a, s);
    JetPolynomial c = total_derivative(out.components[static_cast<std::size_t>(parent)], i, space);
    for (int j = 0; j < space.p(); ++j) {
      const JetPolynomial& d = dxi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (d.is_zero()) continue;
      c -= JetPolynomial::variable(space.shifted(parent, j)) * d;
    }
    out.components[static_cast<std::size_t>(id)] = std::move(c);
  }
  return out;
}

/// A generator family: a vector field whose components may involve
/// arbitrary functions of the base variables, written f or f[i,j] for the
/// (i,j)-th partial derivative. Components must be linear in the functions.
struct ParamField {
  std::string name;
  std::vector<std::string> functions;
  std::map<std::string, std::string> components;  // coordinate name -> expression
};

/// One member of the parameter basis: a function replaced by a monomial of
/// the base variables, all other functions by 0. degree = -1 for
/// parameter-free generators.
struct BasisField {
  std::string label;
  int degree = -1;
  VectorField field;
};

namespace detail {

inline JetPolynomial base_monomial(const MultiIndex& e) {
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) m.emplace_back(static_cast<int>(i), e[i]);
  return JetPolynomial::term(1, std::move(m));
}

/// d^g x^e
inline JetPolynomial derivative_of_monomial(const MultiIndex& e, const MultiIndex& g) {
  Rational c = 1;
  MultiIndex r = e;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (g[i] > e[i]) return {};
    for (int t = 0; t < g[i]; ++t) c *= e[i] - t;
    r[i] -= g[i];
  }
  return base_monomial(r) * JetPolynomial(c);
}

/// Evaluates the components with function `fn` replaced by `value` (a
/// linear combination of base monomials given as exponent -> coefficient).
inline VectorField substitute(const ParamField& g, const JetSpace& order0, const std::string& fn,
                              const std::map<MultiIndex, Rational>& value) {
  auto resolve = [&](const SymbolRef& s) -> JetPolynomial {
    for (const auto& f : g.functions)
      if (s.name == f) {
        MultiIndex der(static_cast<std::size_t>(order0.p()), 0);
        if (s.indexed) {
          if (static_cast<int>(s.indices.size()) != order0.p())
            throw Error(Errc::invalid_scenario, "derivative " + s.to_string() + " needs one index per base variable");
          der = s.indices;
          for (int v : der)
            if (v < 0) throw Error(Errc::invalid_scenario, "negative derivative index in " + s.to_string());
        }
        if (f != fn) return {};
        JetPolynomial acc;
        for (const auto& [e, c] : value) acc += derivative_of_monomial(e, der) * JetPolynomial(c);
        return acc;
      }
    const int id = order0.find(s);
    if (id < 0) throw Error(Errc::invalid_scenario, "unknown symbol '" + s.to_string() + "' in generator " + g.name);
    return JetPolynomial::variable(id);
  };
  auto power = [](const JetPolynomial& b, int e) {
    if (e < 0) throw Error(Errc::invalid_scenario, "negative power in a generator");
    return b.pow(static_cast<unsigned>(e));
  };
  VectorField f{std::vector<JetPolynomial>(static_cast<std::size_t>(order0.p())),
                std::vector<JetPolynomial>(static_cast<std::size_t>(order0.q()))};
  for (const auto& [coord, text] : g.components) {
    const int id = order0.find(coord);
    if (id < 0) throw Error(Errc::invalid_scenario, "generator " + g.name + " has a component on unknown '" + coord + "'");
    JetPolynomial v = parse_expression<JetPolynomial>(text, resolve, power);
    if (id < order0.p()) {
      f.xi[static_cast<std::size_t>(id)] = std::move(v);
    } else {
      f.phi[static_cast<std::size_t>(id - order0.p())] = std::move(v);
    }
  }
  return f;
}

inline bool same_field(const VectorField& a, const VectorField& b) { return a.xi == b.xi && a.phi == b.phi; }

inline VectorField combine(const VectorField& a, const VectorField& b, int sign) {
  VectorField r = a;
  for (std::size_t i = 0; i < r.xi.size(); ++i) r.xi[i] += b.xi[i] * JetPolynomial(sign);
  for (std::size_t i = 0; i < r.phi.size(); ++i) r.phi[i] += b.phi[i] * JetPolynomial(sign);
  return r;
}

}  // namespace detail

/// Expands generator families into the parameter basis with monomials of
/// degree <= max_degree, in generator order, then function order, then
/// graded monomial order.
inline std::vector<BasisField> expand(const std::vector<ParamField>& generators, const JetSpace& order0,
                                      int max_degree) {
  std::vector<BasisField> out;
  const auto monomials = graded_multi_indices(order0.p(), max_degree);
  for (const auto& g : generators) {
    if (g.functions.empty()) {
      out.push_back({g.name, -1, detail::substitute(g, order0, "", {})});
      continue;
    }
    for (const auto& fn : g.functions) {
      for (const auto& other : g.functions)
        if (order0.find(other) >= 0) throw Error(Errc::invalid_scenario, "function name '" + other + "' is a coordinate");
      const VectorField zero = detail::substitute(g, order0, fn, {});
      const VectorField empty{std::vector<JetPolynomial>(zero.xi.size()), std::vector<JetPolynomial>(zero.phi.size())};
      if (!detail::same_field(zero, empty))
        throw Error(Errc::invalid_scenario, "generator " + g.name + " has a parameter-free part");
      // additivity on the first two monomials
      if (monomials.size() >= 2) {
        const VectorField a = detail::substitute(g, order0, fn, {{monomials[0], 1}});
        const VectorField b = detail::substitute(g, order0, fn, {{monomials[1], 1}});
        const VectorField ab = detail::substitute(g, order0, fn, {{monomials[0], 1}, {monomials[1], 1}});
        if (!detail::same_field(detail::combine(ab, a, -1), b))
          throw Error(Errc::invalid_scenario, "generator " + g.name + " is not linear in " + fn);
      }
      for (const auto& e : monomials) {
        std::string label = fn + "=" + (degree(e) == 0 ? std::string("1") : std::string());
        for (int i = 0; i < order0.p(); ++i) {
          const int v = e[static_cast<std::size_t>(i)];
          if (v == 0) continue;
          if (label.back() != '=') label += "*";
          label += order0.base_names()[static_cast<std::size_t>(i)] + (v > 1 ? "^" + std::to_string(v) : "");
        }
        out.push_back({g.name + " " + label, degree(e), detail::substitute(g, order0, fn, {{e, 1}})});
      }
    }
  }
  return out;
}

}  // namespace poincare::jet
