#pragma once

// Built-in scenarios, in the format read by parse_scenario.

namespace poincare::jet {

/// f(x,y) d/dx, d/dy, d/du acting on functions u(x,y), with the chain of
/// strata cut out by u_10, u_20, u_11, u_30, u_21, u_12.
inline constexpr const char* kLieExampleJson = R"json({
  "schema": "poincare-scenario",
  "version": 1,
  "name": "lie-example",
  "description": "f(x,y) d/dx + d/dy + d/du on J(R^2, R)",
  "base": ["x", "y"],
  "fiber": ["u"],
  "max_order": 8,
  "generators": [
    {"name": "f d/dx", "functions": ["f"], "components": {"x": "f"}},
    {"name": "d/dy", "components": {"y": "1"}},
    {"name": "d/du", "components": {"u": "1"}}
  ],
  "strata": [
    {"label": "Sigma0", "inequations": ["u_10"], "reference": "0"},
    {"label": "Sigma1", "equalities": ["u_10"], "inequations": ["u_20"], "reference": "z/(1-z)"},
    {"label": "Sigma2", "equalities": ["u_10", "u_20"], "inequations": ["u_11"], "reference": "(z-z^2+z^3)/(1-z)"},
    {"label": "Sigma3", "equalities": ["u_10", "u_20", "u_11"], "inequations": ["u_30"], "reference": "(z+z^3)/(1-z)"},
    {"label": "Sigma4", "equalities": ["u_10", "u_20", "u_11", "u_30"], "inequations": ["u_21"],
     "reference": "(z+z^4)/(1-z)"},
    {"label": "Sigma5", "equalities": ["u_10", "u_20", "u_11", "u_30", "u_21"], "inequations": ["u_12"],
     "reference": "(z-z^3+z^4)/(1-z)"},
    {"label": "Sigma6", "equalities": ["u_10", "u_20", "u_11", "u_30", "u_21", "u_12"],
     "reference": "(z+2z^4)/(1-z)"}
  ],
  "invariants": [
    {"name": "I1", "stratum": "Sigma1", "expr": "u_01"},
    {"name": "I2", "stratum": "Sigma1", "expr": "u_02 - u_11^2/u_20"},
    {"name": "I3", "stratum": "Sigma1",
     "expr": "u_03 - u_11^3/u_20^3*u_30 + 3*u_11^2/u_20^2*u_21 - 3*u_11/u_20*u_12"},
    {"name": "u20", "stratum": "Sigma1", "expr": "u_20", "expect": false},
    {"name": "I1", "stratum": "Sigma2", "expr": "u_01"},
    {"name": "I3", "stratum": "Sigma2", "expr": "u_30/u_11^3"},
    {"name": "I4", "stratum": "Sigma2", "expr": "u_40/u_11^4 - 6*u_30*u_21/u_11^5 + 3*u_02*u_30^2/u_11^6"},
    {"name": "I1", "stratum": "Sigma3", "expr": "u_01"},
    {"name": "I2", "stratum": "Sigma3", "expr": "u_02"},
    {"name": "I3a", "stratum": "Sigma3", "expr": "u_03 + 2*u_21^3/u_30^2 - 3*u_21*u_12/u_30"},
    {"name": "I3b", "stratum": "Sigma3", "expr": "(u_30*u_12 - u_21^2)^3/u_30^4"}
  ]
})json";

/// Plane diffeomorphisms acting on metrics g11 dx^2 + 2 g12 dx dy + g22 dy^2
/// by the Lie derivative: X = a d/dx + b d/dy lifts with fiber part
/// -(g dxi + dxi^T g).
inline constexpr const char* kMetric2dJson = R"json({
  "schema": "poincare-scenario",
  "version": 1,
  "name": "metric2d",
  "description": "Riemannian metrics on R^2 under diffeomorphisms",
  "base": ["x", "y"],
  "fiber": ["g11", "g12", "g22"],
  "max_order": 4,
  "positive_definite": ["g11", "g12", "g22"],
  "generators": [
    {"name": "a d/dx + b d/dy", "functions": ["a", "b"], "components": {
      "x": "a",
      "y": "b",
      "g11": "-2*(g11*a[1,0] + g12*b[1,0])",
      "g12": "-(g12*a[1,0] + g22*b[1,0] + g11*a[0,1] + g12*b[0,1])",
      "g22": "-2*(g12*a[0,1] + g22*b[0,1])"
    }}
  ],
  "strata": [{"label": "positive-definite", "reference": "z^2(1-z+2z^2-z^3)/(1-z)^2"}]
})json";

/// X = 2r d/dr + s d/ds, Y = r d/ds + 2s d/dt on R^3(r, s, t).
inline constexpr const char* kDistributionJson = R"json({
  "schema": "poincare-scenario",
  "version": 1,
  "name": "distribution",
  "description": "rank-2 distribution <2r d/dr + s d/ds, r d/ds + 2s d/dt> on R^3",
  "base": [],
  "fiber": ["r", "s", "t"],
  "max_order": 1,
  "generators": [
    {"name": "X", "components": {"r": "2*r", "s": "s"}},
    {"name": "Y", "components": {"s": "r", "t": "2*s"}}
  ],
  "strata": [
    {"label": "r!=0", "inequations": ["r"]},
    {"label": "r=0,s!=0", "equalities": ["r"], "inequations": ["s"]},
    {"label": "r=s=0", "equalities": ["r", "s"]}
  ],
  "invariants": [
    {"name": "t-s^2/r", "stratum": "r!=0", "expr": "t - s^2/r"},
    {"name": "t-s^2/t (candidate)", "stratum": "r!=0", "expr": "t - s^2/t", "expect": false},
    {"name": "t", "stratum": "r=s=0", "expr": "t"}
  ]
})json";

}  // namespace poincare::jet
