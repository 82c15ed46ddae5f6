#pragma once

// Built-in catalog metadata. Schema "poincare-catalog", version 1:
//
//   entries[]    id, title, group ("ode" | "metric" | "connection" | "conformal" |
//                "almost-complex" | "normal-form"), params[] {name, min, max?,
//                default}, base_dim (expression in the params), pr_form (the
//                denominator must be a power of 1-z), hilbert (h_k data
//                available), formula (the h_k or P statement), flags[],
//                degenerate {n: note}, displays[] {params, expr, note}
//   aliases[]    alias, id, params
//   identities[] lhs {id, params}, rhs {id, params}, relation
//                ("equal-poincare" | "poincare-over-z" | "equal-hilbert"),
//                over (optional parameter name swept by verify)

namespace poincare {

inline constexpr const char* kCatalogJson = R"json({
  "schema": "poincare-catalog",
  "version": 1,
  "entries": [
    {"id": "ode-general", "title": "2nd order ODE y'' = f(x, y, y') under point transformations",
     "group": "ode", "params": [], "base_dim": "4", "pr_form": true, "hilbert": true,
     "formula": "h_k = 0 for k <= 4, h_5 = 3, h_k = C(k,2) - 4 for k > 5"},
    {"id": "ode-cubic", "title": "2nd order ODE cubic in y' under point transformations",
     "group": "ode", "params": [], "base_dim": "2", "pr_form": true, "hilbert": true,
     "formula": "h_k = 0 for k < 4, h_k = 2(k-1) for k >= 4"},
    {"id": "ode-lie-form", "title": "2nd order ODE y'' = f(x, y) under fiber-preserving transformations",
     "group": "ode", "params": [], "base_dim": "2", "pr_form": true, "hilbert": true,
     "formula": "h_k = 0 for k <= 3, h_4 = 2, h_k = k - 1 for k >= 5"},
    {"id": "riemannian", "title": "Riemannian metrics on M^n",
     "group": "metric", "params": [{"name": "n", "min": 2, "default": 2}], "base_dim": "n",
     "pr_form": true, "hilbert": true,
     "formula": "h_2 = C(n,3)(n+3)/2, h_k = C(n+1,2)C(n+k-1,k) - nC(n+k,k+1) for k > 2; n = 2: h_2 = h_3 = 1, h_k = k - 1",
     "displays": [{"params": {"n": 2}, "expr": "z^2(1-z+2z^2-z^3)/(1-z)^2"}]},
    {"id": "einstein", "title": "Einstein metrics on M^n",
     "group": "metric", "params": [{"name": "n", "min": 2, "default": 4}], "base_dim": "n",
     "pr_form": true, "hilbert": true,
     "formula": "h_2 = (n^2-1)(n^2-12)/12, h_k = (k-1)n(n+k-1)(n+2k-2)/(2(k+1)(n-2)) C(n+k-4,k) for k > 2",
     "degenerate": {"2": "P = z^2", "3": "P = z^2"},
     "displays": [{"params": {"n": 4}, "expr": "z^2(5+9z-15z^2+5z^3)/(1-z)^3", "note": "4D"},
                  {"params": {"n": 4}, "expr": "2z^2(2+6z-9z^2+3z^3)/(1-z)^3+z^2", "note": "Ricci-flat part plus z^2"}]},
    {"id": "self-dual-metrics", "title": "Self-dual metrics on M^4",
     "group": "metric", "params": [{"name": "n", "min": 4, "max": 4, "default": 4}], "base_dim": "n",
     "pr_form": true, "hilbert": true,
     "formula": "h_2 = 9, h_k = (k-1)(k^2+25k+36)/6 for k > 2",
     "displays": [{"params": {"n": 4}, "expr": "z^2(9+4z-30z^2+24z^3-6z^4)/(1-z)^4"}]},
    {"id": "kaehler", "title": "Kaehler metrics on M^2n",
     "group": "metric", "params": [{"name": "n", "min": 1, "default": 2}], "base_dim": "2*n",
     "pr_form": true, "hilbert": true,
     "formula": "h_2 = n^2(n-1)(n+3)/4, h_k = C(2n+k+1,k+2) - 2C(n+k+1,k+2) - 2nC(n+k,k+1) for k > 2; n = 1 as riemannian n = 2"},
    {"id": "hyper-kaehler", "title": "Hyper-Kaehler metrics on M^4n",
     "group": "metric", "params": [{"name": "n", "min": 1, "default": 1}], "base_dim": "4*n",
     "pr_form": true, "hilbert": true,
     "formula": "h_2 = n(n+3)(2n-1)(2n+1)/6, h_k = 2 sum_{i=0..n} C(2n+k-i,k)(n-i) - C(2n+k+1,k+2) - 2C(n+k+1,k+2) for k > 2"},
    {"id": "linear-connections", "title": "Linear connections on M^n",
     "group": "connection", "params": [{"name": "n", "min": 2, "default": 3}], "base_dim": "n",
     "pr_form": true, "hilbert": true,
     "formula": "h_0 = n^2(n-3)/2, h_k = n^3 C(n+k-1,k) - nC(n+k+1,k+2) for k > 0; n = 2: h_1 = 6, h_k = 6k + 2",
     "displays": [{"params": {"n": 2}, "expr": "2z(3+z-z^2)/(1-z)^2"}]},
    {"id": "symmetric-connections", "title": "Symmetric (torsion-free) connections on M^n",
     "group": "connection", "params": [{"name": "n", "min": 2, "default": 3}], "base_dim": "n",
     "pr_form": true, "hilbert": true,
     "formula": "h_1 = n^2(n^2-4)/3 + d(2,n), h_2 = nC(n+1,2)^2 - nC(n+3,4) - d(2,n), h_k = nC(n+1,2)C(n+k-1,n-1) - nC(n+k+1,n-1)",
     "displays": [{"params": {"n": 2}, "expr": "z(1+5z-z^2-z^3)/(1-z)^2"}]},
    {"id": "metric-connections", "title": "Metric connections (g, nabla) on M^n",
     "group": "connection", "params": [{"name": "n", "min": 2, "default": 3}], "base_dim": "n",
     "pr_form": true, "hilbert": true,
     "formula": "h_0 = n(n-1)^2/2, h_k = n(n+1)/2 C(n+k,k+1) + n^2(n-1)/2 C(n+k-1,k) - nC(n+k+1,k+2) for k > 0"},
    {"id": "metric-connections-skew-torsion", "title": "Metric connections with totally skew torsion on M^n",
     "group": "connection", "params": [{"name": "n", "min": 3, "default": 3}], "base_dim": "n",
     "pr_form": true, "hilbert": false,
     "formula": "P = (n - C(n,2)(z^2-z))/z^2 - (n - C(n+1,2)z - C(n,3)z^2)/(z^2(1-z)^n) + st_n(1-z), st = 3, 3, 2, 0, ... for n = 3, 4, 5, 6, ...",
     "flags": ["derived-from-P"]},
    {"id": "metrizable-connections", "title": "Metrizable (Levi-Civita) connections on M^n",
     "group": "connection", "params": [{"name": "n", "min": 2, "default": 2}], "base_dim": "n",
     "pr_form": true, "hilbert": true,
     "formula": "P = P_riemannian(z)/z, h_k = h_{k+1}(riemannian)"},
    {"id": "fedosov", "title": "Fedosov structures (omega, nabla) on M^2n",
     "group": "connection", "params": [{"name": "n", "min": 1, "default": 1}], "base_dim": "2*n",
     "pr_form": true, "hilbert": true,
     "formula": "h_1 = (n-1)n(2n+1)(2n+3)/2 + d(n,1), h_2 = n(n+1)(3n+2)(4n^2-1)/5 - d(n,1), h_k = C(2n+2,3)C(2n+k-1,k) - C(2n+k+2,k+3) for k >= 3",
     "displays": [{"params": {"n": 1}, "expr": "z(1+3z-z^3)/(1-z)^2"}]},
    {"id": "projective-connections", "title": "Projective connections on M^n",
     "group": "connection", "params": [{"name": "n", "min": 2, "default": 3}], "base_dim": "n",
     "pr_form": true, "hilbert": true,
     "formula": "h_1 = n^2(n^2-7)/3, h_2 = n(n-2)(5n^3+16n^2+15n+12)/24, h_k = n(n-1)(n+2)/2 C(n+k-1,k) - nC(n+k+1,k+2) for k > 2; n = 2: h_k = 2(k-1) for k >= 4",
     "displays": [{"params": {"n": 2}, "expr": "2z^4(3-2z)/(1-z)^2"}]},
    {"id": "conformal", "title": "Conformal structures on M^n",
     "group": "conformal", "params": [{"name": "n", "min": 3, "default": 3}], "base_dim": "n",
     "pr_form": true, "hilbert": true,
     "formula": "h_2 = n^2(n^2-1)/12 - n^2 - 1, h_3 = n(n^4+2n^3-5n^2-14n-32)/24, h_k = (C(n+1,2)-1)C(n+k-1,k) - nC(n+k,k+1) for k >= 4; n = 3: h_3 = 1, h_4 = 9, h_k = k^2 - 4",
     "displays": [{"params": {"n": 3}, "expr": "z^3(1+z)(1+5z-8z^2+3z^3)/(1-z)^3"}]},
    {"id": "weyl", "title": "Weyl structures ([g], nabla) on M^n",
     "group": "conformal", "params": [{"name": "n", "min": 2, "default": 3}], "base_dim": "n",
     "pr_form": true, "hilbert": true,
     "formula": "h_1 = (n^2-4)(n^2+3)/12 + d(2,n), h_2 = n(n^2-1)(n^2+2n+8)/24 - d(2,n), h_k = (C(n+1,2)-1)C(n+k,k+1) + nC(n+k-1,k) - nC(n+k+1,k+2) for k > 2"},
    {"id": "einstein-weyl", "title": "Einstein-Weyl structures on M^n",
     "group": "conformal", "params": [{"name": "n", "min": 3, "default": 3}], "base_dim": "n",
     "pr_form": true, "hilbert": true,
     "formula": "h_1 = (n-3)n(n+1)(n+2)/12 + d(n,3), h_2 = n(n-1)(n-2)(n^2+5n+8)/24 - d(n,3), h_k = (C(n+1,2)-1)(C(n+k,k+1) - C(n+k-2,k-1)) + nC(n+k-1,k) - nC(n+k+1,k+2) for k > 2",
     "displays": [{"params": {"n": 3}, "expr": "z(1+5z-z^2-z^3)/(1-z)^2"}]},
    {"id": "self-dual-conformal", "title": "Self-dual conformal structures on M^4",
     "group": "conformal", "params": [{"name": "n", "min": 4, "max": 4, "default": 4}], "base_dim": "n",
     "pr_form": true, "hilbert": true,
     "formula": "h_2 = 1, h_3 = 13, h_k = 3k^2 - 7 for k > 3",
     "displays": [{"params": {"n": 4}, "expr": "z^2(1+10z+5z^2-17z^3+7z^4)/(1-z)^3"}]},
    {"id": "almost-complex", "title": "Almost complex structures on M^2n",
     "group": "almost-complex", "params": [{"name": "n", "min": 2, "default": 2}], "base_dim": "2*n",
     "pr_form": true, "hilbert": true,
     "formula": "h_k = 2n^2 C(2n+k-1,k) - 2nC(2n+k,k+1) + 2nC(n+k,k+1) - 2nC(n+k-1,k) + 2(d(k,1) - d(k,2))d(n,3) for k > 0; n = 2: h_2 = 2, h_k = 8C(k+3,k) - 4C(k+4,k+1) + 4",
     "displays": [{"params": {"n": 2}, "expr": "2z^2(1+8z-12z^2+6z^3-z^4)/(1-z)^4"},
                  {"params": {"n": 3}, "expr": "2z(1+26z-36z^2+10z^3+17z^4-18z^5+7z^6-z^7)/(1-z)^6"}]},
    {"id": "hamiltonian-critical", "title": "Critical linearly stable Hamiltonians on R^2n under symplectomorphisms",
     "group": "normal-form", "params": [{"name": "n", "min": 1, "default": 1}], "base_dim": "2*n",
     "pr_form": false, "hilbert": false,
     "formula": "P = 1/(1-z^2)^n",
     "flags": ["other-unit-circle-poles"]},
    {"id": "poincare-dulac", "title": "Planar vector fields at a singular point (formal normal forms)",
     "group": "normal-form",
     "params": [{"name": "case", "min": 1, "max": 5, "default": 1}, {"name": "m", "min": 1, "default": 2},
                {"name": "p", "min": 1, "default": 1}, {"name": "q", "min": 1, "default": 1}],
     "base_dim": "2", "pr_form": false, "hilbert": false,
     "formula": "case 1: P = 2z; case 2: P = z + z^m (m > 1); case 3: P = z + z^(m+1) + z^(2m+1), m = p + q; case 4: P = (z - z^(m+1))/(1-z) + z^(2m+1); case 5: P = (1+z+z^2-z^4)z^2/(1-z^3)",
     "flags": ["other-unit-circle-poles"]}
  ],
  "aliases": [
    {"alias": "poincare-dulac-nonresonant", "id": "poincare-dulac", "params": {"case": 1}},
    {"alias": "poincare-dulac-poincare-domain", "id": "poincare-dulac", "params": {"case": 2}},
    {"alias": "poincare-dulac-saddle", "id": "poincare-dulac", "params": {"case": 3}},
    {"alias": "poincare-dulac-saddle-node", "id": "poincare-dulac", "params": {"case": 4}},
    {"alias": "takens-bogdanov", "id": "poincare-dulac", "params": {"case": 5}}
  ],
  "identities": [
    {"lhs": {"id": "projective-connections", "params": {"n": 2}}, "rhs": {"id": "ode-cubic", "params": {}},
     "relation": "equal-poincare"},
    {"lhs": {"id": "metrizable-connections", "params": {}}, "rhs": {"id": "riemannian", "params": {}},
     "relation": "poincare-over-z", "over": "n"},
    {"lhs": {"id": "kaehler", "params": {"n": 1}}, "rhs": {"id": "riemannian", "params": {"n": 2}},
     "relation": "equal-hilbert"},
    {"lhs": {"id": "einstein-weyl", "params": {"n": 3}}, "rhs": {"id": "symmetric-connections", "params": {"n": 2}},
     "relation": "equal-poincare"}
  ]
})json";

}  // namespace poincare
