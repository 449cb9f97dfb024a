#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fracgreen/fracnum.hpp"
#include "fracgreen/kernels.hpp"
#include "fracgreen/quadrature.hpp"

using namespace fracgreen;

namespace {

// Fourier-multiplier oracle for the Gaussian: (2/sqrt(2 pi)) int_0^inf
// rho^{2a} e^{-rho^2/2} cos(x rho) d rho.
double gaussian_fourier_oracle(double x, double a) {
  return 2.0 / std::sqrt(2.0 * kPi) *
         integrate_adaptive(
             [&](double rho) {
               return std::pow(rho, 2.0 * a) * std::exp(-0.5 * rho * rho) *
                      std::cos(x * rho);
             },
             0.0, 14.0, 1e-13)
             .value;
}

// Fourier-multiplier oracle for compactly supported smooth u and the
// operator (-d^2/dx^2 + 1)^a (drift-free Bessel case).
double bump_bessel_fourier_oracle(const SmoothFunc1D& u, double x, double a) {
  auto uhat = [&](double rho) {
    return 2.0 * integrate_adaptive(
                     [&](double y) { return u.value(y) * std::cos(y * rho); },
                     0.0, 1.0, 1e-13)
                     .value;
  };
  const QuadratureRule& gl = gauss_legendre(40);
  const int nseg = 120;
  const double cutoff = 600.0;
  CompensatedSum acc;
  for (int s = 0; s < nseg; ++s) {
    double lo = cutoff * s / nseg, hi = cutoff * (s + 1) / nseg;
    for (size_t i = 0; i < gl.nodes.size(); ++i) {
      double rho = 0.5 * (lo + hi) + 0.5 * (hi - lo) * gl.nodes[i];
      acc.add(0.5 * (hi - lo) * gl.weights[i] *
              std::pow(rho * rho + 1.0, a) * uhat(rho) * std::cos(x * rho));
    }
  }
  return acc.value() / kPi;
}

double getoor_constant(double a) {
  return std::pow(4.0, a) * std::tgamma(a + 1.0) * std::tgamma(a + 0.5) /
         std::tgamma(0.5);
}

}  // namespace

TEST_CASE("pointwise Taylor data matches finite differences") {
  EdgeFunction1D edge(0.37, {0.5, -1.0, 0.25});
  BumpFunc bump;
  GaussianFunc gauss;
  const SmoothFunc1D* funcs[3] = {&edge, &bump, &gauss};
  double h = 1e-4;
  for (const SmoothFunc1D* f : funcs) {
    for (double x : {0.1, -0.55, 0.72}) {
      double d[11];
      f->taylor(x, 10, d);
      CHECK(d[0] == doctest::Approx(f->value(x)).epsilon(1e-14));
      double fd1 = (f->value(x + h) - f->value(x - h)) / (2.0 * h);
      double fd2 =
          (f->value(x + h) - 2.0 * f->value(x) + f->value(x - h)) / (h * h);
      CHECK(d[1] == doctest::Approx(fd1).epsilon(1e-6));
      CHECK(d[2] == doctest::Approx(fd2).epsilon(1e-5));
    }
  }
}

TEST_CASE("normalization constant: closed form vs the Gaussian oracle") {
  CHECK(frac_constant(0.5) == doctest::Approx(1.0 / kPi).epsilon(1e-14));
  // decreases to zero as a -> 0+
  CHECK(frac_constant(1e-3) < frac_constant(0.05));
  CHECK(frac_constant(0.05) < frac_constant(0.3));
  CHECK_THROWS_AS(frac_constant(1.2), std::invalid_argument);

  GaussianFunc gauss;
  for (double a : {0.5, 0.75, 0.35}) {
    for (double x : {0.0, 0.5}) {
      PointValue pv = fraclap_pv(gauss, x, a);
      double oracle = gaussian_fourier_oracle(x, a);
      CHECK(std::abs(pv.value - oracle) <= 1e-10 * (1.0 + std::abs(oracle)));
    }
  }
}

TEST_CASE("the a-1 edge profile is annihilated in the interior") {
  for (double a : {0.6, 0.75, 0.9}) {
    EdgeFunction1D u(a - 1.0, {1.0});
    for (double x : {0.0, 0.5, -0.5})
      CHECK(std::abs(fraclap_pv(u, x, a).value) < 1e-6);
  }
}

TEST_CASE("the a edge profile maps to a constant") {
  for (double a : {0.6, 0.75}) {
    EdgeFunction1D v(a, {1.0});
    double c1 = getoor_constant(a);
    double v0 = fraclap_pv(v, 0.0, a).value;
    double v5 = fraclap_pv(v, 0.5, a).value;
    CHECK(std::abs(v0 - v5) <= 1e-7 * std::abs(v0));
    CHECK(v0 == doctest::Approx(c1).epsilon(1e-9));
  }
}

TEST_CASE("pointwise evaluation is resolution-stable at even symmetry") {
  double a = 0.75;
  EdgeFunction1D v(a, {1.0});
  FracLapOptions fine;
  fine.quad_tol = 1e-12;
  double coarse_v = fraclap_pv(v, 0.0, a).value;
  double fine_v = fraclap_pv(v, 0.0, a, fine).value;
  CHECK(std::abs(coarse_v - fine_v) <= 1e-9);
}

TEST_CASE("guards: rejection near the edge and outside (0,1)") {
  EdgeFunction1D u(0.5, {1.0});
  CHECK_THROWS_AS(fraclap_pv(u, 0.9995, 0.75), std::invalid_argument);
  CHECK_THROWS_AS(fraclap_pv(u, 0.0, 1.5), std::invalid_argument);
}

TEST_CASE("weighted traces of the two edge classes") {
  double a = 0.75;
  double ga = std::tgamma(a), ga1 = std::tgamma(a + 1.0);

  EdgeFunction1D u(a - 1.0, {1.0});
  EndpointTraces tu = weighted_traces(u, a);
  CHECK(tu.right.gamma0 == doctest::Approx(ga * std::pow(2.0, a - 1.0)).epsilon(1e-14));
  CHECK(tu.left.gamma0 == doctest::Approx(ga * std::pow(2.0, a - 1.0)).epsilon(1e-14));
  CHECK(tu.right.gamma1 ==
        doctest::Approx(ga1 * (1.0 - a) * std::pow(2.0, a - 2.0)).epsilon(1e-14));
  CHECK(tu.left.gamma1 ==
        doctest::Approx(ga1 * (1.0 - a) * std::pow(2.0, a - 2.0)).epsilon(1e-14));

  EdgeFunction1D v(a, {1.0});
  EndpointTraces tv = weighted_traces(v, a);
  CHECK(tv.right.gamma0 == 0.0);
  CHECK(tv.left.gamma0 == 0.0);
  CHECK(tv.right.gamma1 == doctest::Approx(ga1 * std::pow(2.0, a)).epsilon(1e-14));

  // vanishing boundary factor in w kills the Dirichlet trace at that end
  EdgeFunction1D z(a - 1.0, {-1.0, 1.0});  // w(x) = x - 1
  CHECK(weighted_traces(z, a).right.gamma0 == 0.0);

  EdgeFunction1D bad(0.3, {1.0});
  CHECK_THROWS_AS(weighted_traces(bad, a), std::invalid_argument);
}

TEST_CASE("trace homogeneity is exact") {
  double a = 0.7;
  EdgeFunction1D u(a - 1.0, {0.4, -0.2, 1.1});
  EdgeFunction1D su(a - 1.0, {3.0 * 0.4, 3.0 * -0.2, 3.0 * 1.1});
  EndpointTraces t1 = weighted_traces(u, a);
  EndpointTraces t3 = weighted_traces(su, a);
  CHECK(t3.right.gamma0 == doctest::Approx(3.0 * t1.right.gamma0).epsilon(1e-15));
  CHECK(t3.right.gamma1 == doctest::Approx(3.0 * t1.right.gamma1).epsilon(1e-15));
  CHECK(t3.left.gamma1 == doctest::Approx(3.0 * t1.left.gamma1).epsilon(1e-15));
}

TEST_CASE("fractional Green identity: symmetric pair vanishes") {
  double a = 0.75;
  EdgeFunction1D u(a - 1.0, {1.0});
  GreensReport rep = greens_residual_fraclap(u, u, a);
  CHECK(std::abs(rep.lhs) < 1e-9);
  CHECK(rep.rhs == 0.0);
}

TEST_CASE("fractional Green identity: closed-form value at three exponents") {
  for (double a : {0.6, 0.75, 0.9}) {
    EdgeFunction1D u(a - 1.0, {1.0});
    EdgeFunction1D v(a, {1.0});
    GreensReport rep = greens_residual_fraclap(u, v, a);
    double ref = -std::pow(4.0, a) * std::tgamma(a) * std::tgamma(a + 1.0);
    CHECK(std::abs(rep.lhs - ref) <= 1e-4 * std::abs(ref));
    CHECK(std::abs(rep.rhs - ref) <= 1e-12 * std::abs(ref));  // exact traces
    CHECK(rep.residual <= 1e-4 * std::max(std::abs(rep.lhs), 1.0));
  }
}

TEST_CASE("fractional Green identity: polynomial asymmetric pair") {
  double a = 0.75;
  EdgeFunction1D u(a - 1.0, {0.0, 1.0});  // x (1-x^2)^{a-1}
  EdgeFunction1D v(a, {1.0});
  GreensReport rep = greens_residual_fraclap(u, v, a);
  CHECK(rep.residual <= 1e-4 * std::max({std::abs(rep.lhs), std::abs(rep.rhs), 1e-3}));
}

TEST_CASE("fractional Green identity rejects the duality-only regime") {
  EdgeFunction1D u(0.4 - 1.0, {1.0});
  EdgeFunction1D v(0.4, {1.0});
  CHECK_THROWS_AS(greens_residual_fraclap(u, v, 0.4), std::invalid_argument);
}

TEST_CASE("property: both sides are antisymmetric and bilinear") {
  double a = 0.75;
  EdgeFunction1D u(a - 1.0, {1.0, 0.5});
  EdgeFunction1D v(a, {1.0, -0.25});
  GreensReport uv = greens_residual_fraclap(u, v, a);
  GreensReport vu = greens_residual_fraclap(v, u, a);
  CHECK(std::abs(uv.lhs + vu.lhs) <= 1e-8 * (1.0 + std::abs(uv.lhs)));
  CHECK(std::abs(uv.rhs + vu.rhs) <= 1e-12 * (1.0 + std::abs(uv.rhs)));

  // bilinearity in u at fixed quadrature setup
  EdgeFunction1D u1(a - 1.0, {1.0});
  EdgeFunction1D u2(a - 1.0, {0.0, 1.0});
  EdgeFunction1D ucomb(a - 1.0, {2.0, -3.0});
  GreensReport r1 = greens_residual_fraclap(u1, v, a);
  GreensReport r2 = greens_residual_fraclap(u2, v, a);
  GreensReport rc = greens_residual_fraclap(ucomb, v, a);
  CHECK(std::abs(rc.lhs - (2.0 * r1.lhs - 3.0 * r2.lhs)) <=
        1e-8 * (1.0 + std::abs(rc.lhs)));
  CHECK(std::abs(rc.rhs - (2.0 * r1.rhs - 3.0 * r2.rhs)) <=
        1e-12 * (1.0 + std::abs(rc.rhs)));
}

TEST_CASE("bessel kernel: the two evaluation paths agree") {
  for (double s : {0.1, 0.25, 0.4})
    for (double m : {0.5, 1.0, std::sqrt(2.0)})
      for (double z : {1e-4, 0.01, 0.3, 1.0, 3.0}) {
        double k1 = bessel_potential_kernel(z, m, s);
        double k2 = bessel_potential_kernel_quadrature(z, m, s);
        CHECK(std::abs(k1 - k2) <= 1e-8 * (1.0 + std::abs(k1)));
      }
  CHECK_THROWS_AS(bessel_potential_kernel(0.0, 1.0, 0.25),
                  std::invalid_argument);
}

TEST_CASE("drift power: Fourier oracle, parity, classical limit") {
  double a = 0.75;
  BumpFunc bump;

  for (double x : {0.0, 0.3}) {
    double oracle = bump_bessel_fourier_oracle(bump, x, a);
    PointValue got = drift_power_apply(bump, x, a, 0.0, 1.0);
    CHECK(std::abs(got.value - oracle) <= 1e-6 * (1.0 + std::abs(oracle)));
  }

  PointValue pl = drift_power_apply(bump, 0.37, a, 0.0, 1.0);
  PointValue pr = drift_power_apply(bump, -0.37, a, 0.0, 1.0);
  CHECK(std::abs(pl.value - pr.value) <= 1e-8 * (1.0 + std::abs(pl.value)));

  double c = 0.8, c0 = 1.1, x = 0.22;
  double d[3];
  bump.taylor(x, 2, d);
  double classical = -d[2] + c * d[1] + c0 * d[0];
  PointValue near1 = drift_power_apply(bump, x, 0.99, c, c0);
  CHECK(std::abs(near1.value - classical) <= 0.02 * std::abs(classical));

  CHECK_THROWS_AS(drift_power_apply(bump, 0.0, a, 1.0, -2.0),
                  std::invalid_argument);
}

TEST_CASE("drift Green identity: drift-free, symmetric, and asymmetric runs") {
  double a = 0.75;

  // c = 0 keeps m^2 = c0 > 0 and drops the boundary correction
  {
    EdgeFunction1D u(a - 1.0, {1.0});
    EdgeFunction1D v(a, {1.0});
    GreensReport rep = greens_residual_drift(u, v, a, 0.0, 1.0);
    CHECK(rep.residual <= 1e-3 * std::max(std::abs(rep.rhs), 1.0));
    CHECK(rep.rhs == rep.rhs_without_drift_term);
  }

  // symmetric pair: correction cancels between the endpoints
  {
    EdgeFunction1D u(a - 1.0, {1.0});
    GreensReport rep = greens_residual_drift(u, u, a, 1.0, 1.0);
    CHECK(std::abs(rep.rhs - rep.rhs_without_drift_term) < 1e-14);
    CHECK(rep.residual <= 1e-3);
  }

  // asymmetric pair: the correction is exactly the observed mis-balance
  {
    EdgeFunction1D u(a - 1.0, {1.0});
    EdgeFunction1D v(a - 1.0, {0.0, 1.0});
    GreensReport rep = greens_residual_drift(u, v, a, 1.0, 1.0);
    double scale = std::max({std::abs(rep.lhs), std::abs(rep.rhs), 1.0});
    CHECK(rep.residual <= 1e-3 * scale);
    double g = std::tgamma(a) * std::pow(2.0, a - 1.0);
    double predicted = 2.0 * a * 1.0 * g * g;
    CHECK(std::abs((rep.lhs - rep.rhs_without_drift_term) - predicted) <=
          1e-3 * scale);
  }
}
