#include "fracgreen/scenario.hpp"

namespace fracgreen {

namespace {

// The full verification suite; suites/acceptance.json mirrors this document
// byte for byte (a test keeps the two in sync).
const std::string kAcceptanceSuite = R"({
  "scenarios": [
    {"kind": "jump_table", "name": "jump-table",
     "xi_brackets": [1.0, 1.4142135623730951, 5.0], "a_nn": [1.0, 2.0, 4.0],
     "tolerance": 1e-12},
    {"kind": "bsym_check", "name": "boundary-symbol-equivalence",
     "mode": "random_equivalence", "cases": 50,
     "a_values": [0.3, 0.5, 0.75, 1.25], "xi_norm_range": [1.0, 10.0],
     "tolerance": 1e-9, "seed": 1201},
    {"kind": "bsym_check", "name": "laplacian-symbol-vanishes",
     "mode": "laplacian_zero", "points": 20, "a": 0.7, "tolerance": 1e-12,
     "seed": 1202},
    {"kind": "bsym_check", "name": "normal-drift-symbol",
     "mode": "localized_laplacian", "a": 0.6, "tolerance": 1e-10,
     "seed": 1203},
    {"kind": "bsym_check", "name": "perturbed-normal-drift-symbol",
     "mode": "perturbed_localized", "a": 0.6, "tolerance": 1e-10,
     "seed": 1204},
    {"kind": "bsym_check", "name": "locality-classifier",
     "mode": "locality_classifier", "cases": 40, "seed": 1205},
    {"kind": "power_contour", "name": "contour-oracle", "cases": 20,
     "nodes": 64, "tolerance": 1e-8, "seed": 1206},
    {"kind": "geometry", "name": "tube-jacobian-identity",
     "mode": "tube_jacobian_identity", "points": 200, "tolerance": 1e-6,
     "seed": 1207},
    {"kind": "geometry", "name": "curvature-cancellation",
     "mode": "ag_cancellation", "cases": 100, "tolerance": 1e-8,
     "seed": 1208},
    {"kind": "geometry", "name": "surface-checks", "mode": "surface_checks",
     "tolerance": 1e-10},
    {"kind": "greens_fraclap", "name": "greens-identity-a0.6", "a": 0.6,
     "u": {"mu": "a-1", "w": [1.0]}, "v": {"mu": "a", "w": [1.0]},
     "tolerance": 1e-4, "closed_form_reference": true},
    {"kind": "greens_fraclap", "name": "greens-identity-a0.75", "a": 0.75,
     "u": {"mu": "a-1", "w": [1.0]}, "v": {"mu": "a", "w": [1.0]},
     "tolerance": 1e-4, "closed_form_reference": true},
    {"kind": "greens_fraclap", "name": "greens-identity-a0.9", "a": 0.9,
     "u": {"mu": "a-1", "w": [1.0]}, "v": {"mu": "a", "w": [1.0]},
     "tolerance": 1e-4, "closed_form_reference": true},
    {"kind": "greens_drift", "name": "greens-identity-drift", "a": 0.75,
     "c": 1.0, "c0": 1.0, "u": {"mu": "a-1", "w": [1.0]},
     "v": {"mu": "a-1", "w": [0.0, 1.0]}, "tolerance": 1e-3,
     "check_misbalance": true},
    {"kind": "greens_drift", "name": "greens-identity-driftfree", "a": 0.75,
     "c": 0.0, "c0": 1.0, "u": {"mu": "a-1", "w": [1.0]},
     "v": {"mu": "a", "w": [1.0]}, "tolerance": 1e-3}
  ]
}
)";

}  // namespace

const std::string& builtin_suite(const std::string& name) {
  if (name == "acceptance") return kAcceptanceSuite;
  throw ConfigError("unknown built-in suite '" + name +
                    "' (available: acceptance)");
}

}  // namespace fracgreen
