#pragma once

#include <functional>
#include <vector>

#include "fracgreen/numeric.hpp"

namespace fracgreen {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1] (cached per n).
const QuadratureRule& gauss_legendre(int n);

/// Gauss-Jacobi rule on [-1, 1] with weight (1-x)^alpha (1+x)^beta,
/// alpha, beta > -1. Nodes by Newton iteration on the Jacobi recurrence.
QuadratureRule gauss_jacobi(int n, double alpha, double beta);

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

/// Integrand receives (x, x - lo, hi - x); the distances are supplied
/// directly so endpoint-singular factors can be formed without cancellation.
using SingularIntegrand = std::function<double(double, double, double)>;

/// tanh-sinh quadrature on [lo, hi]; handles integrable endpoint
/// singularities (x - lo)^p, (hi - x)^p for any p > -1. Levels are doubled
/// until the change is below tol (absolute) or max_level is reached.
IntegralResult tanh_sinh(const SingularIntegrand& f, double lo, double hi,
                         double tol, int max_level = 10);

/// Adaptive bisection Gauss-Legendre for integrands smooth on [lo, hi].
IntegralResult integrate_adaptive(const std::function<double(double)>& f,
                                  double lo, double hi, double tol,
                                  int max_segments = 4000);

}  // namespace fracgreen
