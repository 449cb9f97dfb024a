#include "fracgreen/roots.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fracgreen {

namespace {

constexpr int kMaxIter = 400;
// Roots closer than this (relative) are treated as one multiple root; a
// multiplicity-blind iteration resolves an m-fold root only to ~eps^(1/m).
constexpr double kClusterRadius = 2e-5;

std::vector<cplx> quadratic_roots(cplx a, cplx b, cplx c) {
  // numerically stable resolution of b^2 - 4ac
  cplx disc = std::sqrt(b * b - 4.0 * a * c);
  if (std::real(std::conj(b) * disc) < 0.0) disc = -disc;
  cplx q = -0.5 * (b + disc);
  std::vector<cplx> out;
  out.push_back(q / a);
  if (std::abs(q) > 0.0)
    out.push_back(c / q);
  else
    out.push_back(cplx(0.0));
  return out;
}

}  // namespace

std::vector<cplx> find_roots(const Poly& p_in) {
  if (p_in.is_zero()) throw std::invalid_argument("find_roots: zero polynomial");
  Poly p = p_in.monic();
  int n = p.degree();
  if (n == 0) return {};
  if (n == 1) return {-p.coeff(0)};
  if (n == 2) return quadratic_roots(1.0, p.coeff(1), p.coeff(0));

  Poly dp = p.derivative();

  // Cauchy bound on root magnitudes for the initial circle.
  double bound = 0.0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(p.coeff(k)));
  double radius = 1.0 + bound;

  std::vector<cplx> z(n);
  for (int i = 0; i < n; ++i) {
    double theta = 2.0 * kPi * (i + 0.5) / n + 0.43;  // asymmetric start
    z[i] = 0.7 * radius * std::polar(1.0, theta);
  }

  for (int iter = 0; iter < kMaxIter; ++iter) {
    double max_step = 0.0;
    for (int i = 0; i < n; ++i) {
      cplx pv = p.eval(z[i]);
      cplx dv = dp.eval(z[i]);
      if (pv == cplx(0.0)) continue;
      cplx w = (dv != cplx(0.0)) ? pv / dv : cplx(1e-2);
      cplx s = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      cplx denom = 1.0 - w * s;
      cplx step = (std::abs(denom) > 1e-30) ? w / denom : w;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[i])));
    }
    if (max_step < 1e-14) return z;
  }
  // Accept if residuals are small even without step convergence.
  for (const cplx& r : z) {
    double scale = 1.0;
    double am = std::abs(r);
    for (int k = n; k >= 0; --k) scale = scale * am + std::abs(p.coeff(k));
    if (std::abs(p.eval(r)) > 1e-10 * scale)
      throw std::runtime_error("find_roots: Aberth iteration did not converge");
  }
  return z;
}

std::vector<RootCluster> find_root_clusters(const Poly& p_in) {
  Poly p = p_in.monic();
  std::vector<cplx> roots = find_roots(p);
  int n = static_cast<int>(roots.size());

  // Union-find clustering with relative radius.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double scale = 1.0 + std::max(std::abs(roots[i]), std::abs(roots[j]));
      if (std::abs(roots[i] - roots[j]) <= kClusterRadius * scale)
        parent[find(i)] = find(j);
    }

  std::vector<RootCluster> clusters;
  std::vector<int> label(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (label[r] < 0) {
      label[r] = static_cast<int>(clusters.size());
      clusters.push_back({cplx(0.0), 0});
    }
    RootCluster& c = clusters[label[r]];
    c.location += roots[i];
    c.order += 1;
  }
  for (RootCluster& c : clusters) c.location /= static_cast<double>(c.order);

  // Polish each center: an m-fold root of p is a simple root of p^(m-1).
  for (RootCluster& c : clusters) {
    Poly q = p;
    for (int k = 1; k < c.order; ++k) q = q.derivative();
    Poly dq = q.derivative();
    cplx zz = c.location;
    for (int it = 0; it < 60; ++it) {
      cplx qv = q.eval(zz);
      cplx dv = dq.eval(zz);
      if (std::abs(dv) < 1e-300) break;
      cplx step = qv / dv;
      zz -= step;
      if (std::abs(step) <= 1e-16 * (1.0 + std::abs(zz))) break;
    }
    // keep the polished value only if it stayed inside the cluster
    if (std::abs(zz - c.location) <= 4.0 * kClusterRadius * (1.0 + std::abs(zz)))
      c.location = zz;
  }

  // Validate by re-expanding the factorization.
  std::vector<cplx> all;
  for (const RootCluster& c : clusters)
    for (int k = 0; k < c.order; ++k) all.push_back(c.location);
  Poly rebuilt = Poly::from_roots(all);
  double scale = std::max(p.coeff_scale(), 1.0);
  for (int k = 0; k <= p.degree(); ++k) {
    if (std::abs(rebuilt.coeff(k) - p.coeff(k)) > 1e-7 * scale)
      throw std::runtime_error(
          "find_root_clusters: factorization residual too large");
  }

  std::sort(clusters.begin(), clusters.end(), [](const RootCluster& a, const RootCluster& b) {
    if (std::real(a.location) != std::real(b.location))
      return std::real(a.location) < std::real(b.location);
    return std::imag(a.location) < std::imag(b.location);
  });
  return clusters;
}

}  // namespace fracgreen
