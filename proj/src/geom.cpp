#include "fracgreen/geom.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "fracgreen/quadrature.hpp"

namespace fracgreen {
namespace geom {

namespace {

double det(const Mat& m, int n) {
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat inverse(const Mat& m, int n) {
  double d = det(m, n);
  if (std::abs(d) < 1e-14)
    throw std::runtime_error("geom: singular tubular matrix");
  Mat inv{};
  if (n == 2) {
    inv[0][0] = m[1][1] / d;
    inv[0][1] = -m[0][1] / d;
    inv[1][0] = -m[1][0] / d;
    inv[1][1] = m[0][0] / d;
    return inv;
  }
  inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
  inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
  inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
  inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
  inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
  inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
  inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
  inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
  inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
  return inv;
}

void assemble(const SurfacePatch& patch, const Vec& y, Mat* m_out, Mat* n_out) {
  int n = patch.ambient_dim;
  Vec tangents[2], dnu[2];
  patch.dchi(y, tangents);
  patch.dnormal(y, dnu);
  Vec nu = patch.normal(y);
  Mat M{}, N{};
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c + 1 < n; ++c) {
      M[r][c] = tangents[c][r];
      N[r][c] = dnu[c][r];
    }
    M[r][n - 1] = nu[r];
    N[r][n - 1] = 0.0;
  }
  *m_out = M;
  *n_out = N;
}

double trace_product(const Mat& a, const Mat& b, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) acc += a[i][k] * b[k][i];
  return acc;
}

// Generic normalized-field helper: given an (unnormalized) outward field w
// and its parameter derivatives, produce the interior unit normal and its
// derivatives. nu = -w/|w|, d nu = -(dw/|w| - w (w . dw)/|w|^3).
struct NormalFromField {
  std::function<Vec(const Vec&)> w;
  std::function<void(const Vec&, Vec*)> dw;
  int n;
  int nparams;

  Vec normal(const Vec& y) const {
    Vec wv = w(y);
    double norm = 0.0;
    for (int i = 0; i < n; ++i) norm += wv[i] * wv[i];
    norm = std::sqrt(norm);
    Vec out{};
    for (int i = 0; i < n; ++i) out[i] = -wv[i] / norm;
    return out;
  }
  void dnormal(const Vec& y, Vec* cols) const {
    Vec wv = w(y);
    Vec dcols[2];
    dw(y, dcols);
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) norm2 += wv[i] * wv[i];
    double norm = std::sqrt(norm2);
    for (int j = 0; j < nparams; ++j) {
      double wdw = 0.0;
      for (int i = 0; i < n; ++i) wdw += wv[i] * dcols[j][i];
      for (int i = 0; i < n; ++i)
        cols[j][i] = -(dcols[j][i] / norm - wv[i] * wdw / (norm2 * norm));
    }
  }
};

double estimate_reach_guard(const SurfacePatch& patch) {
  // 0.1 x (min curvature radius estimate) from sampled |d nu| / |d chi|.
  int samples = 24;
  double max_ratio = 0.0;
  for (int i = 0; i <= samples; ++i)
    for (int j = 0; j <= (patch.ambient_dim == 3 ? samples : 0); ++j) {
      Vec y{patch.box_lo[0] + (patch.box_hi[0] - patch.box_lo[0]) * i / samples,
            patch.box_lo[1] + (patch.box_hi[1] - patch.box_lo[1]) *
                                  (patch.ambient_dim == 3 ? double(j) / samples
                                                          : 0.0),
            0.0};
      Vec tang[2], dnu[2];
      patch.dchi(y, tang);
      patch.dnormal(y, dnu);
      for (int c = 0; c + 1 < patch.ambient_dim; ++c) {
        double nt = 0.0, nn = 0.0;
        for (int r = 0; r < patch.ambient_dim; ++r) {
          nt += tang[c][r] * tang[c][r];
          nn += dnu[c][r] * dnu[c][r];
        }
        if (nt > 0.0) max_ratio = std::max(max_ratio, std::sqrt(nn / nt));
      }
    }
  if (max_ratio <= 1e-12) return 10.0;  // flat patch
  return 0.1 / max_ratio;
}

}  // namespace

SurfacePatch line_patch(double lo, double hi) {
  SurfacePatch p;
  p.ambient_dim = 2;
  p.name = "line";
  p.box_lo = {lo, 0.0};
  p.box_hi = {hi, 0.0};
  p.chi = [](const Vec& y) { return Vec{y[0], 0.0, 0.0}; };
  p.dchi = [](const Vec&, Vec* cols) { cols[0] = Vec{1.0, 0.0, 0.0}; };
  p.normal = [](const Vec&) { return Vec{0.0, 1.0, 0.0}; };
  p.dnormal = [](const Vec&, Vec* cols) { cols[0] = Vec{0.0, 0.0, 0.0}; };
  p.reach_guard = 10.0;
  return p;
}

SurfacePatch ellipse_patch(double ax, double ay, double theta_lo,
                           double theta_hi) {
  SurfacePatch p;
  p.ambient_dim = 2;
  p.name = "ellipse";
  p.box_lo = {theta_lo, 0.0};
  p.box_hi = {theta_hi, 0.0};
  auto field = std::make_shared<NormalFromField>(NormalFromField{
      [ax, ay](const Vec& y) {
        return Vec{std::cos(y[0]) / ax, std::sin(y[0]) / ay, 0.0};
      },
      [ax, ay](const Vec& y, Vec* cols) {
        cols[0] = Vec{-std::sin(y[0]) / ax, std::cos(y[0]) / ay, 0.0};
      },
      2, 1});
  p.chi = [ax, ay](const Vec& y) {
    return Vec{ax * std::cos(y[0]), ay * std::sin(y[0]), 0.0};
  };
  p.dchi = [ax, ay](const Vec& y, Vec* cols) {
    cols[0] = Vec{-ax * std::sin(y[0]), ay * std::cos(y[0]), 0.0};
  };
  p.normal = [field](const Vec& y) { return field->normal(y); };
  p.dnormal = [field](const Vec& y, Vec* cols) { field->dnormal(y, cols); };
  p.reach_guard = estimate_reach_guard(p);
  return p;
}

SurfacePatch circle_patch(double radius, double theta_lo, double theta_hi) {
  SurfacePatch p = ellipse_patch(radius, radius, theta_lo, theta_hi);
  p.name = "circle";
  return p;
}

// Parameters are (phi, theta): this column order makes det M > 0 with the
// interior normal, matching the orientation assumption.
SurfacePatch ellipsoid_patch(double ax, double ay, double az,
                             std::array<double, 2> theta_range,
                             std::array<double, 2> phi_range) {
  SurfacePatch p;
  p.ambient_dim = 3;
  p.name = "ellipsoid";
  p.box_lo = {phi_range[0], theta_range[0]};
  p.box_hi = {phi_range[1], theta_range[1]};
  auto field = std::make_shared<NormalFromField>(NormalFromField{
      [ax, ay, az](const Vec& y) {
        return Vec{std::sin(y[1]) * std::cos(y[0]) / ax,
                   std::sin(y[1]) * std::sin(y[0]) / ay, std::cos(y[1]) / az};
      },
      [ax, ay, az](const Vec& y, Vec* cols) {
        cols[0] = Vec{-std::sin(y[1]) * std::sin(y[0]) / ax,
                      std::sin(y[1]) * std::cos(y[0]) / ay, 0.0};
        cols[1] = Vec{std::cos(y[1]) * std::cos(y[0]) / ax,
                      std::cos(y[1]) * std::sin(y[0]) / ay,
                      -std::sin(y[1]) / az};
      },
      3, 2});
  p.chi = [ax, ay, az](const Vec& y) {
    return Vec{ax * std::sin(y[1]) * std::cos(y[0]),
               ay * std::sin(y[1]) * std::sin(y[0]), az * std::cos(y[1])};
  };
  p.dchi = [ax, ay, az](const Vec& y, Vec* cols) {
    cols[0] = Vec{-ax * std::sin(y[1]) * std::sin(y[0]),
                  ay * std::sin(y[1]) * std::cos(y[0]), 0.0};
    cols[1] = Vec{ax * std::cos(y[1]) * std::cos(y[0]),
                  ay * std::cos(y[1]) * std::sin(y[0]), -az * std::sin(y[1])};
  };
  p.normal = [field](const Vec& y) { return field->normal(y); };
  p.dnormal = [field](const Vec& y, Vec* cols) { field->dnormal(y, cols); };
  p.reach_guard = estimate_reach_guard(p);
  return p;
}

SurfacePatch sphere_patch(double radius, std::array<double, 2> theta_range,
                          std::array<double, 2> phi_range) {
  SurfacePatch p = ellipsoid_patch(radius, radius, radius, theta_range, phi_range);
  p.name = "sphere";
  return p;
}

SurfacePatch named_patch(const std::string& spec) {
  auto args = [&spec]() {
    std::vector<double> out;
    auto l = spec.find('(');
    if (l == std::string::npos) return out;
    auto r = spec.find(')', l);
    std::string inner = spec.substr(l + 1, r - l - 1);
    size_t pos = 0;
    while (pos < inner.size()) {
      size_t next = inner.find(',', pos);
      if (next == std::string::npos) next = inner.size();
      out.push_back(std::stod(inner.substr(pos, next - pos)));
      pos = next + 1;
    }
    return out;
  }();
  std::string head = spec.substr(0, spec.find('('));
  if (head == "line") return line_patch();
  if (head == "circle")
    return circle_patch(args.empty() ? 1.0 : args[0], -kPi / 2.0, kPi / 2.0);
  if (head == "ellipse")
    return ellipse_patch(args.size() > 0 ? args[0] : 2.0,
                         args.size() > 1 ? args[1] : 1.0, -kPi / 2.0, kPi / 2.0);
  if (head == "sphere")
    return sphere_patch(args.empty() ? 1.0 : args[0], {0.4, kPi - 0.4},
                        {0.0, kPi});
  if (head == "ellipsoid")
    return ellipsoid_patch(args.size() > 0 ? args[0] : 2.0,
                           args.size() > 1 ? args[1] : 1.5,
                           args.size() > 2 ? args[2] : 1.0, {0.4, kPi - 0.4},
                           {0.0, kPi});
  throw std::invalid_argument("named_patch: unknown patch '" + spec + "'");
}

TubularPoint tubular_map(const SurfacePatch& patch, const Vec& y, double t) {
  if (std::abs(t) >= patch.reach_guard)
    throw std::invalid_argument("tubular_map: |t| beyond the reach guard");
  Mat M, N;
  assemble(patch, y, &M, &N);
  TubularPoint out;
  Vec base = patch.chi(y);
  Vec nu = patch.normal(y);
  int n = patch.ambient_dim;
  for (int i = 0; i < n; ++i) out.x[i] = base[i] + t * nu[i];
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.d[r][c] = M[r][c] + t * N[r][c];
  return out;
}

Jacobians jacobians(const SurfacePatch& patch, const Vec& y) {
  int n = patch.ambient_dim;
  Mat M, N;
  assemble(patch, y, &M, &N);

  Jacobians out;
  out.j0 = det(M, n);

  // Gram determinant of the tangent columns
  Vec tang[2];
  patch.dchi(y, tang);
  if (n == 2) {
    double g = 0.0;
    for (int r = 0; r < 2; ++r) g += tang[0][r] * tang[0][r];
    out.j0_alt = std::sqrt(g);
  } else {
    double g00 = 0.0, g01 = 0.0, g11 = 0.0;
    for (int r = 0; r < 3; ++r) {
      g00 += tang[0][r] * tang[0][r];
      g01 += tang[0][r] * tang[1][r];
      g11 += tang[1][r] * tang[1][r];
    }
    out.j0_alt = std::sqrt(g00 * g11 - g01 * g01);
  }

  Mat Minv = inverse(M, n);
  out.j1 = out.j0 * trace_product(N, Minv, n);

  // Richardson-extrapolated central difference of det(M + tN) at t = 0;
  // exact here for the polynomial det once extrapolated.
  auto det_at = [&](double t) {
    Mat D{};
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) D[r][c] = M[r][c] + t * N[r][c];
    return det(D, n);
  };
  double h = 1e-3;
  double d1 = (det_at(h) - det_at(-h)) / (2.0 * h);
  double d2 = (det_at(h / 2.0) - det_at(-h / 2.0)) / h;
  out.j1_fd = (4.0 * d2 - d1) / 3.0;
  return out;
}

double mean_curvature_g(const SurfacePatch& patch, const Vec& y) {
  return mean_curvature_g_at(patch, y, 0.0);
}

double mean_curvature_g_at(const SurfacePatch& patch, const Vec& y, double t) {
  int n = patch.ambient_dim;
  Mat M, N;
  assemble(patch, y, &M, &N);
  Mat Mt{};
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) Mt[r][c] = M[r][c] + t * N[r][c];
  return trace_product(N, inverse(Mt, n), n);
}

SurfaceIntegral surface_integral(const SurfacePatch& patch,
                                 const std::function<double(const Vec&)>& phi,
                                 int nodes_per_axis) {
  auto run = [&](int nodes) {
    const QuadratureRule& rule = gauss_legendre(nodes);
    int n = patch.ambient_dim;
    CompensatedSum acc;
    double lo0 = patch.box_lo[0], hi0 = patch.box_hi[0];
    double mid0 = 0.5 * (lo0 + hi0), rad0 = 0.5 * (hi0 - lo0);
    if (n == 2) {
      for (int i = 0; i < nodes; ++i) {
        Vec y{mid0 + rad0 * rule.nodes[i], 0.0, 0.0};
        acc.add(rad0 * rule.weights[i] * phi(patch.chi(y)) *
                jacobians(patch, y).j0);
      }
    } else {
      double lo1 = patch.box_lo[1], hi1 = patch.box_hi[1];
      double mid1 = 0.5 * (lo1 + hi1), rad1 = 0.5 * (hi1 - lo1);
      for (int i = 0; i < nodes; ++i)
        for (int j = 0; j < nodes; ++j) {
          Vec y{mid0 + rad0 * rule.nodes[i], mid1 + rad1 * rule.nodes[j], 0.0};
          acc.add(rad0 * rad1 * rule.weights[i] * rule.weights[j] *
                  phi(patch.chi(y)) * jacobians(patch, y).j0);
        }
    }
    return acc.value();
  };
  double coarse = run(nodes_per_axis);
  double fine = run(nodes_per_axis + 8);
  return {fine, std::abs(fine - coarse)};
}

double localized_laplacian_residual(const SurfacePatch& patch,
                                    const AmbientField& u, const Vec& y,
                                    double t) {
  double lap = u.laplacian(tubular_map(patch, y, t).x);

  auto along_normal = [&](double s) { return u.value(tubular_map(patch, y, s).x); };
  double h = 1e-3;
  if (std::abs(t) + 2.0 * h >= patch.reach_guard)
    throw std::invalid_argument(
        "localized_laplacian_residual: offset too close to the reach guard");

  // Richardson on first and second normal derivatives.
  auto d1 = [&](double step) {
    return (along_normal(t + step) - along_normal(t - step)) / (2.0 * step);
  };
  auto d2 = [&](double step) {
    return (along_normal(t + step) - 2.0 * along_normal(t) +
            along_normal(t - step)) /
           (step * step);
  };
  double du = (4.0 * d1(h / 2.0) - d1(h)) / 3.0;
  double ddu = (4.0 * d2(h / 2.0) - d2(h)) / 3.0;

  double g = mean_curvature_g_at(patch, y, t);
  return lap - g * du - ddu;
}

std::pair<cplx, cplx> trace_transform(double j0, double j1, cplx g0, cplx g1,
                                      double a) {
  return {j0 * g0, j0 * g1 + a * j1 * g0};
}

}  // namespace geom
}  // namespace fracgreen
