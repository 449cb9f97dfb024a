#pragma once

#include "fracgreen/numeric.hpp"

namespace fracgreen {

/// Convolution kernel of (-d^2/dx^2 + m^2)^{-s} on the line, 0 < s < 1:
///   kappa(z) = (Gamma(s) sqrt(pi))^{-1} (|z|/(2m))^{s-1/2} K_{1/2-s}(m|z|),
/// locally integrable (~ |z|^{2s-1} at the origin), exponentially decaying.
/// Closed form via the standard Bessel-K routine.
double bessel_potential_kernel(double z, double m, double s);

/// Same kernel through the integral representation
///   K_nu(x) = int_0^inf e^{-x cosh v} cosh(nu v) dv
/// evaluated by trapezoid sums (no special-function routine); independent
/// cross-check path, agreeing with the closed form to 1e-8 relative.
double bessel_potential_kernel_quadrature(double z, double m, double s);

}  // namespace fracgreen
