#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fracgreen/numeric.hpp"

namespace fracgreen {

/// A real function on the line, smooth in the interior of its support, with
/// pointwise Taylor data. Implementations: edge profiles (1-x^2)_+^mu w(x),
/// the Gaussian, and a compactly supported bump.
class SmoothFunc1D {
 public:
  virtual ~SmoothFunc1D() = default;
  virtual double value(double x) const = 0;
  /// Value with the factors (1 - x) and (1 + x) supplied exactly, so edge
  /// profiles can be evaluated near +-1 without cancellation. Default
  /// ignores the factors.
  virtual double value_edge(double x, double one_minus_x,
                            double one_plus_x) const {
    (void)one_minus_x;
    (void)one_plus_x;
    return value(x);
  }
  /// Derivatives u^(0..order)(x) at an interior point.
  virtual void taylor(double x, int order, double* out) const = 0;
  /// u vanishes (or is negligible) outside [-R, R].
  virtual double support_radius() const = 0;
  /// Distance from x to the nearest point where u is not analytic
  /// (edge profiles: the support endpoints); huge for entire functions.
  virtual double analyticity_radius(double x) const = 0;
  virtual std::string describe() const = 0;
};

/// u(x) = (1 - x^2)_+^mu w(x) with polynomial w; the input class for the
/// Green checks (mu = a-1 or a).
class EdgeFunction1D : public SmoothFunc1D {
 public:
  EdgeFunction1D(double mu, std::vector<double> w_coeffs);

  double mu() const { return mu_; }
  const std::vector<double>& w() const { return w_; }
  double w_value(double x) const;
  double w_derivative(double x) const;

  double value(double x) const override;
  double value_edge(double x, double one_minus_x,
                    double one_plus_x) const override;
  void taylor(double x, int order, double* out) const override;
  double support_radius() const override { return 1.0; }
  double analyticity_radius(double x) const override {
    return std::max(1e-300, 1.0 - std::abs(x));
  }
  std::string describe() const override;

 private:
  double mu_;
  std::vector<double> w_;
};

/// exp(-x^2/2); not compactly supported but negligible past |x| ~ 13.
class GaussianFunc : public SmoothFunc1D {
 public:
  double value(double x) const override { return std::exp(-0.5 * x * x); }
  void taylor(double x, int order, double* out) const override;
  double support_radius() const override { return 13.0; }
  double analyticity_radius(double) const override { return 1e6; }
  std::string describe() const override { return "gaussian"; }
};

/// exp(-1/(1-x^2)) on (-1,1), zero outside; all derivatives vanish at +-1.
class BumpFunc : public SmoothFunc1D {
 public:
  double value(double x) const override;
  void taylor(double x, int order, double* out) const override;
  double support_radius() const override { return 1.0; }
  double analyticity_radius(double x) const override {
    return std::max(1e-300, 1.0 - std::abs(x));
  }
  std::string describe() const override { return "bump"; }
};

/// Normalization constant of the principal-value form of the half Laplacian
/// power on the line: 4^a Gamma(1/2 + a) / (sqrt(pi) |Gamma(-a)|), a in (0,1).
double frac_constant(double a);

struct PointValue {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

struct FracLapOptions {
  double boundary_guard = 1e-3;  // reject x closer than this to a singularity
  double quad_tol = 1e-10;       // per-segment tanh-sinh tolerance
  long max_evaluations = 200000;
};

/// Pointwise fractional Laplacian, 0 < a < 1, via the symmetric-difference
/// principal-value form: near field by Taylor expansion of u, far field by
/// singularity-aware quadrature, analytic tail beyond the support.
PointValue fraclap_pv(const SmoothFunc1D& u, double x, double a,
                      const FracLapOptions& opts = {});

struct TracePair {
  double gamma0 = 0.0;
  double gamma1 = 0.0;
};

struct EndpointTraces {
  TracePair right;  // x = +1
  TracePair left;   // x = -1
};

/// Weighted Dirichlet/Neumann traces of an edge profile (mu = a-1 or a),
/// computed symbolically; the normal derivative uses the interior normal.
EndpointTraces weighted_traces(const EdgeFunction1D& u, double a);

struct DriftOptions {
  double boundary_guard = 1e-3;
  double quad_tol = 1e-11;  // convolution tolerance
  double fd_step = 1e-2;    // cap for the outer second-difference step
  long max_evaluations = 400000;
};

/// (-Delta + c d/dx + c0)^a u at an interior point, for constant real c, c0
/// with m^2 = c0 + c^2/4 > 0, via conjugation with e^{cx/2} and the
/// Bessel-potential convolution kernel.
PointValue drift_power_apply(const SmoothFunc1D& u, double x, double a,
                             double c, double c0,
                             const DriftOptions& opts = {});

struct GreensReport {
  double lhs = 0.0;
  double lhs_error = 0.0;
  double rhs = 0.0;
  double rhs_without_drift_term = 0.0;
  double residual = 0.0;
  double a = 0.0;
  double c = 0.0;
  double c0 = 0.0;
  std::string u_desc;
  std::string v_desc;
  long evaluations = 0;
  double runtime_ms = 0.0;
};

struct GreensOptions {
  std::vector<int> node_levels;  // Gauss-Jacobi sizes, ascending
  FracLapOptions fraclap;
  DriftOptions drift;
  int jobs = 1;
};

/// Two-sided identity for the fractional Laplacian on (-1, 1): volume pairing
/// against the weighted boundary traces. Requires 1/2 < a < 1 (below that the
/// pairing only exists as a duality, which is out of scope here).
GreensReport greens_residual_fraclap(const EdgeFunction1D& u,
                                     const EdgeFunction1D& v, double a,
                                     const GreensOptions& opts = {});

/// Same with the constant-coefficient drift extension: P = (-Delta + c d/dx
/// + c0)^a, adjoint realized by c -> -c, boundary form carrying the
/// -a c_nu gamma0 correction.
GreensReport greens_residual_drift(const EdgeFunction1D& u,
                                   const EdgeFunction1D& v, double a, double c,
                                   double c0, const GreensOptions& opts = {});

}  // namespace fracgreen
