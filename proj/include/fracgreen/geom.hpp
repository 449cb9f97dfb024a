#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "fracgreen/numeric.hpp"

namespace fracgreen {
namespace geom {

// Small fixed-capacity vectors/matrices; ambient dimension is 2 or 3.
using Vec = std::array<double, 3>;
using Mat = std::array<std::array<double, 3>, 3>;

/// Parametric hypersurface patch chi : V' in R^{n-1} -> R^n with analytic
/// derivative providers and a unit interior normal field.
struct SurfacePatch {
  int ambient_dim = 2;  // 2 or 3
  std::string name;
  std::array<double, 2> box_lo{0.0, 0.0};
  std::array<double, 2> box_hi{1.0, 0.0};
  double reach_guard = 0.1;  // max |t| for the tubular map

  std::function<Vec(const Vec&)> chi;
  // columns j = 0..n-2 of d chi / d y'
  std::function<void(const Vec&, Vec*)> dchi;
  std::function<Vec(const Vec&)> normal;
  // columns j = 0..n-2 of d (nu o chi) / d y'
  std::function<void(const Vec&, Vec*)> dnormal;
};

SurfacePatch line_patch(double lo = -1.0, double hi = 1.0);
SurfacePatch circle_patch(double radius, double theta_lo, double theta_hi);
SurfacePatch ellipse_patch(double ax, double ay, double theta_lo,
                           double theta_hi);
SurfacePatch sphere_patch(double radius, std::array<double, 2> theta_range,
                          std::array<double, 2> phi_range);
SurfacePatch ellipsoid_patch(double ax, double ay, double az,
                             std::array<double, 2> theta_range,
                             std::array<double, 2> phi_range);
/// Look up a built-in by name: "line", "circle(R)", "ellipse(a,b)",
/// "sphere(R)", "ellipsoid(a,b,c)".
SurfacePatch named_patch(const std::string& spec);

struct TubularPoint {
  Vec x;
  Mat d;  // [d chi/d y' + t d(nu o chi)/d y' | nu] = M + t N
};

/// x = chi(y') + t nu(chi(y')). Rejects |t| beyond the reach guard.
TubularPoint tubular_map(const SurfacePatch& patch, const Vec& y, double t);

struct Jacobians {
  double j0;      // det M
  double j0_alt;  // sqrt(det(M^T M)) via the tangent Gram determinant
  double j1;      // J0 * div(nu) = J0 * trace(N M^{-1})
  double j1_fd;   // Richardson finite difference of det(M + tN) at t = 0
};

Jacobians jacobians(const SurfacePatch& patch, const Vec& y);

/// trace(N M^{-1}) = div(nu) on the surface (t = 0).
double mean_curvature_g(const SurfacePatch& patch, const Vec& y);

/// div(nu) transported to the parallel surface at offset t:
/// trace(N (M + tN)^{-1}) = d/dt log det(M + tN).
double mean_curvature_g_at(const SurfacePatch& patch, const Vec& y, double t);

struct SurfaceIntegral {
  double value;
  double error_estimate;
};

/// int phi(chi(y')) J0(y') dy' by tensor Gauss-Legendre with nodes_per_axis
/// points; the estimate compares against a refined rule.
SurfaceIntegral surface_integral(const SurfacePatch& patch,
                                 const std::function<double(const Vec&)>& phi,
                                 int nodes_per_axis);

/// Ambient test function with a closed-form Laplacian.
struct AmbientField {
  std::function<double(const Vec&)> value;
  std::function<double(const Vec&)> laplacian;
};

/// Residual of the normal-coordinate split of the Laplacian at (y', t):
/// Delta u - g dt(u) - dtt(u), the part attributable to tangential
/// derivatives (zero for fields constant along the patch directions).
double localized_laplacian_residual(const SurfacePatch& patch,
                                    const AmbientField& u, const Vec& y,
                                    double t);

/// Weighted-trace transformation under multiplication by the tubular
/// Jacobian: h0 = J0 g0, h1 = J0 g1 + a J1 g0 (a = 1 is the classical case).
std::pair<cplx, cplx> trace_transform(double j0, double j1, cplx g0, cplx g1,
                                      double a);

}  // namespace geom
}  // namespace fracgreen
