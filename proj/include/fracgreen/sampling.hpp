#pragma once

#include "fracgreen/bsym.hpp"

namespace fracgreen {

/// Random strongly elliptic jet: complex symmetric A with Re-part >= margin
/// on the sphere, symmetric complex coefficient derivatives of size da_scale,
/// drift of size drift_scale.
OperatorJet sample_elliptic_jet(Rng& rng, int n, double margin,
                                double da_scale, double drift_scale);

/// Random tangential frequency with |xi'| uniform in [lo, hi].
std::vector<double> sample_xi_prime(Rng& rng, int n_minus_1, double lo,
                                    double hi);

/// Random nonzero full frequency vector with entries in [-1, 1].
std::vector<double> sample_xi(Rng& rng, int n);

}  // namespace fracgreen
