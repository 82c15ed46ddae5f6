#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "poincare/expression.hpp"
#include "poincare/jet/jet_polynomial.hpp"

namespace poincare::jet {

using MultiIndex = std::vector<int>;

/// All multi-indices of length p and total degree <= order, graded by degree
/// and, within a degree, lexicographically descending ((2,0), (1,1), (0,2)).
/// The position of a multi-index does not depend on `order`.
inline std::vector<MultiIndex> graded_multi_indices(int p, int order) {
  std::vector<MultiIndex> out;
  for (int d = 0; d <= order; ++d) {
    MultiIndex m(static_cast<std::size_t>(p), 0);
    if (p == 0) {
      if (d == 0) out.push_back(m);
      continue;
    }
    // enumerate compositions of d into p parts, first part descending
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == p - 1) {
        m[static_cast<std::size_t>(pos)] = left;
        out.push_back(m);
        return;
      }
      for (int a = left; a >= 0; --a) {
        m[static_cast<std::size_t>(pos)] = a;
        rec(pos + 1, left - a);
      }
    };
    rec(0, d);
  }
  return out;
}

inline int degree(const MultiIndex& s) {
  int d = 0;
  for (int v : s) d += v;
  return d;
}

/// J^k of maps from R^p to R^q. Coordinate ids: base x_i is i; the fiber
/// coordinate u^a_s is p + q * rank(s) + a, with rank the graded position.
/// Ids are stable across orders, so J^{k-1} is a prefix of J^k.
class JetSpace {
 public:
  JetSpace() = default;
  JetSpace(std::vector<std::string> base, std::vector<std::string> fiber, int order)
      : base_(std::move(base)), fiber_(std::move(fiber)), order_(order) {
    if (order < 0) throw Error(Errc::unsupported_argument, "negative jet order");
    if (fiber_.empty()) throw Error(Errc::invalid_scenario, "jet space needs at least one dependent variable");
    multis_ = graded_multi_indices(p(), order_);
    for (std::size_t r = 0; r < multis_.size(); ++r) rank_[multis_[r]] = static_cast<int>(r);
    for (int id = 0; id < dim(); ++id) {
      const std::string n = name(id);
      if (!ids_.emplace(n, id).second) throw Error(Errc::invalid_scenario, "duplicate coordinate name " + n);
    }
  }

  int p() const noexcept { return static_cast<int>(base_.size()); }
  int q() const noexcept { return static_cast<int>(fiber_.size()); }
  int order() const noexcept { return order_; }
  const std::vector<std::string>& base_names() const noexcept { return base_; }
  const std::vector<std::string>& fiber_names() const noexcept { return fiber_; }

  /// p + q C(p+k, k)
  int dim() const { return dim_at(order_); }
  int dim_at(int k) const {
    if (k < 0) return p();
    return p() + q() * static_cast<int>(binomial(p() + k, k).get_si());
  }

  bool is_base(int id) const { return id < p(); }
  int alpha(int id) const { return (id - p()) % q(); }
  const MultiIndex& sigma(int id) const { return multis_.at(static_cast<std::size_t>((id - p()) / q())); }
  int order_of(int id) const { return is_base(id) ? 0 : degree(sigma(id)); }

  int id(int alpha, const MultiIndex& s) const {
    auto it = rank_.find(s);
    if (it == rank_.end() || alpha < 0 || alpha >= q())
      throw Error(Errc::order_exceeded, "jet coordinate beyond order " + std::to_string(order_));
    return p() + q() * it->second + alpha;
  }

  /// Coordinate u^a_{s + 1_i}; order-exceeded when it leaves J^k.
  int shifted(int id, int i) const {
    MultiIndex s = sigma(id);
    ++s[static_cast<std::size_t>(i)];
    if (degree(s) > order_)
      throw Error(Errc::order_exceeded, "total derivative of " + name(id) + " needs order " +
                                            std::to_string(degree(s)) + " > " + std::to_string(order_));
    return id_unchecked(alpha(id), s);
  }

  /// "x", "u", "u_20"; "u[12,3]" style once an index exceeds 9.
  std::string name(int id) const {
    if (is_base(id)) return base_[static_cast<std::size_t>(id)];
    const std::string& u = fiber_[static_cast<std::size_t>(alpha(id))];
    const MultiIndex& s = sigma(id);
    if (degree(s) == 0) return u;
    bool small = true;
    for (int v : s) small = small && v < 10;
    std::string out = u + (small ? "_" : "[");
    for (std::size_t i = 0; i < s.size(); ++i) out += (small || i == 0 ? "" : ",") + std::to_string(s[i]);
    return small ? out : out + "]";
  }

  /// Resolves "u_20" or "u[2,0]"; -1 when the name is not a coordinate of J^k.
  int find(const SymbolRef& sym) const {
    if (!sym.indexed) {
      auto it = ids_.find(sym.name);
      return it == ids_.end() ? -1 : it->second;
    }
    for (int a = 0; a < q(); ++a)
      if (fiber_[static_cast<std::size_t>(a)] == sym.name) {
        if (static_cast<int>(sym.indices.size()) != p()) return -1;
        for (int v : sym.indices)
          if (v < 0) return -1;
        auto it = rank_.find(sym.indices);
        return it == rank_.end() ? -1 : p() + q() * it->second + a;
      }
    return -1;
  }
  int find(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    return it == ids_.end() ? -1 : it->second;
  }

  /// Coordinate names of J^k in id order.
  std::vector<std::string> names() const {
    std::vector<std::string> v;
    for (int i = 0; i < dim(); ++i) v.push_back(name(i));
    return v;
  }

 private:
  int id_unchecked(int alpha, const MultiIndex& s) const { return p() + q() * rank_.at(s) + alpha; }

  std::vector<std::string> base_;
  std::vector<std::string> fiber_;
  int order_ = 0;
  std::vector<MultiIndex> multis_;
  std::map<MultiIndex, int> rank_;
  std::map<std::string, int> ids_;
};

/// D_i expr = d expr/dx_i + sum u^a_{s+1_i} d expr/du^a_s.
inline JetPolynomial total_derivative(const JetPolynomial& expr, int i, const JetSpace& space) {
  if (i < 0 || i >= space.p()) throw Error(Errc::unsupported_argument, "no base direction " + std::to_string(i));
  JetPolynomial out = expr.derivative(i);
  for (int v : expr.variables()) {
    if (space.is_base(v)) continue;
    out += JetPolynomial::variable(space.shifted(v, i)) * expr.derivative(v);
  }
  return out;
}

/// Parses a polynomial in the coordinates of `space` (division by constants
/// only). Unknown symbols raise parse-error.
inline JetPolynomial parse_jet_polynomial(std::string_view text, const JetSpace& space) {
  auto resolve = [&](const SymbolRef& s) {
    const int id = space.find(s);
    if (id < 0) throw Error(Errc::parse_error, "unknown jet coordinate '" + s.to_string() + "'");
    return JetPolynomial::variable(id);
  };
  auto power = [](const JetPolynomial& b, int e) {
    if (e < 0) throw Error(Errc::parse_error, "negative power in a polynomial");
    return b.pow(static_cast<unsigned>(e));
  };
  return parse_expression<JetPolynomial>(text, resolve, power);
}

/// Parses a rational expression in the coordinates of `space`.
inline JetRational parse_jet_rational(std::string_view text, const JetSpace& space) {
  auto resolve = [&](const SymbolRef& s) {
    const int id = space.find(s);
    if (id < 0) throw Error(Errc::parse_error, "unknown jet coordinate '" + s.to_string() + "'");
    return JetRational(JetPolynomial::variable(id));
  };
  auto power = [](const JetRational& b, int e) { return b.pow(e); };
  return parse_expression<JetRational>(text, resolve, power);
}

}  // namespace poincare::jet
