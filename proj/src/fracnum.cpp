#include "fracgreen/fracnum.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "fracgreen/kernels.hpp"
#include "fracgreen/parallel.hpp"
#include "fracgreen/quadrature.hpp"

namespace fracgreen {

namespace {

// ---- tiny real-polynomial helpers (coefficients ascending) ----------------

using RPoly = std::vector<double>;

double rp_eval(const RPoly& p, double x) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RPoly rp_derivative(const RPoly& p) {
  if (p.size() <= 1) return {};
  RPoly d(p.size() - 1);
  for (size_t k = 1; k < p.size(); ++k) d[k - 1] = k * p[k];
  return d;
}

RPoly rp_mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly c(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

RPoly rp_add(const RPoly& a, const RPoly& b) {
  RPoly c(std::max(a.size(), b.size()), 0.0);
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return c;
}

RPoly rp_scale(double s, const RPoly& a) {
  RPoly c = a;
  for (double& v : c) v *= s;
  return c;
}

// q_j in d^j (1-x^2)^mu = (1-x^2)^{mu-j} q_j(x):
//   q_0 = 1, q_{j+1} = (mu - j)(-2x) q_j + (1 - x^2) q_j'.
std::vector<RPoly> edge_factor_polys(double mu, int order) {
  std::vector<RPoly> q(order + 1);
  q[0] = {1.0};
  RPoly one_minus_x2{1.0, 0.0, -1.0};
  for (int j = 0; j < order; ++j)
    q[j + 1] = rp_add(rp_scale(mu - j, rp_mul({0.0, -2.0}, q[j])),
                      rp_mul(one_minus_x2, rp_derivative(q[j])));
  return q;
}

double binom_int(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::chrono::steady_clock::time_point now() {
  return std::chrono::steady_clock::now();
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(now() - t0).count();
}

}  // namespace

// ---- function classes ------------------------------------------------------

EdgeFunction1D::EdgeFunction1D(double mu, std::vector<double> w_coeffs)
    : mu_(mu), w_(std::move(w_coeffs)) {
  if (!(mu_ > -1.0))
    throw std::invalid_argument("EdgeFunction1D: mu must exceed -1");
  if (w_.empty()) w_ = {0.0};
  if (w_.size() > 9)
    throw std::invalid_argument("EdgeFunction1D: w degree must be <= 8");
}

double EdgeFunction1D::w_value(double x) const { return rp_eval(w_, x); }

double EdgeFunction1D::w_derivative(double x) const {
  return rp_eval(rp_derivative(w_), x);
}

double EdgeFunction1D::value(double x) const {
  return value_edge(x, 1.0 - x, 1.0 + x);
}

double EdgeFunction1D::value_edge(double x, double one_minus_x,
                                  double one_plus_x) const {
  if (one_minus_x <= 0.0 || one_plus_x <= 0.0) return 0.0;
  return std::pow(one_minus_x * one_plus_x, mu_) * rp_eval(w_, x);
}

void EdgeFunction1D::taylor(double x, int order, double* out) const {
  if (std::abs(x) >= 1.0)
    throw std::invalid_argument("EdgeFunction1D::taylor: |x| must be < 1");
  std::vector<RPoly> q = edge_factor_polys(mu_, order);
  double base = 1.0 - x * x;
  // E_j = (1-x^2)^{mu-j} q_j(x)
  std::vector<double> ej(order + 1);
  for (int j = 0; j <= order; ++j)
    ej[j] = std::pow(base, mu_ - j) * rp_eval(q[j], x);
  // w derivatives
  std::vector<double> wd(order + 1, 0.0);
  RPoly wk = w_;
  for (int k = 0; k <= order; ++k) {
    wd[k] = rp_eval(wk, x);
    wk = rp_derivative(wk);
  }
  for (int k = 0; k <= order; ++k) {
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) acc += binom_int(k, j) * ej[j] * wd[k - j];
    out[k] = acc;
  }
}

std::string EdgeFunction1D::describe() const {
  std::string s = "(1-x^2)^" + std::to_string(mu_) + " * poly[";
  for (size_t i = 0; i < w_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w_[i]);
  }
  return s + "]";
}

void GaussianFunc::taylor(double x, int order, double* out) const {
  // d^k e^{-x^2/2} = (-1)^k He_k(x) e^{-x^2/2}
  double u = value(x);
  double hkm1 = 0.0, hk = 1.0;
  for (int k = 0; k <= order; ++k) {
    out[k] = ((k % 2 == 0) ? 1.0 : -1.0) * hk * u;
    double hk1 = x * hk - k * hkm1;
    hkm1 = hk;
    hk = hk1;
  }
}

double BumpFunc::value(double x) const {
  if (std::abs(x) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - x * x));
}

void BumpFunc::taylor(double x, int order, double* out) const {
  if (std::abs(x) >= 1.0)
    throw std::invalid_argument("BumpFunc::taylor: |x| must be < 1");
  // psi = -(1-x^2)^{-1}; psi^{(j)} from the edge-factor recurrence (mu = -1),
  // then u' = psi' u gives u^{(k)} by the Leibniz recurrence.
  std::vector<RPoly> q = edge_factor_polys(-1.0, order + 1);
  double base = 1.0 - x * x;
  std::vector<double> psid(order + 2);
  for (int j = 0; j <= order + 1; ++j)
    psid[j] = -std::pow(base, -1.0 - j) * rp_eval(q[j], x);
  out[0] = std::exp(psid[0]);
  for (int k = 0; k < order; ++k) {
    double acc = 0.0;
    for (int j = 0; j <= k; ++j)
      acc += binom_int(k, j) * psid[j + 1] * out[k - j];
    out[k + 1] = acc;
  }
}

// ---- constants and traces --------------------------------------------------

double frac_constant(double a) {
  if (!(a > 0.0 && a < 1.0))
    throw std::invalid_argument(
        "frac_constant: principal-value form requires 0 < a < 1");
  return std::pow(4.0, a) * std::tgamma(0.5 + a) /
         (std::sqrt(kPi) * std::abs(std::tgamma(-a)));
}

EndpointTraces weighted_traces(const EdgeFunction1D& u, double a) {
  double mu = u.mu();
  bool is_dirichlet_class = std::abs(mu - (a - 1.0)) < 1e-12;  // mu = a-1
  bool is_neumann_class = std::abs(mu - a) < 1e-12;            // mu = a
  if (!is_dirichlet_class && !is_neumann_class)
    throw std::invalid_argument(
        "weighted_traces: mu must equal a-1 or a for these trace formulas");

  double ga = std::tgamma(a);
  double ga1 = std::tgamma(a + 1.0);
  double p = std::pow(2.0, a - 1.0);
  EndpointTraces out;
  if (is_dirichlet_class) {
    // u/d^{a-1} = (1+x)^{a-1} w near x = 1 and (1-x)^{a-1} w near x = -1
    out.right.gamma0 = ga * p * u.w_value(1.0);
    out.right.gamma1 =
        -ga1 * ((a - 1.0) * 0.5 * p * u.w_value(1.0) + p * u.w_derivative(1.0));
    out.left.gamma0 = ga * p * u.w_value(-1.0);
    out.left.gamma1 =
        ga1 * ((1.0 - a) * 0.5 * p * u.w_value(-1.0) + p * u.w_derivative(-1.0));
  } else {
    // u/d^{a-1} = (1-x)(1+x)^a w near x = 1: vanishing trace, normal
    // derivative picks the boundary factor
    out.right.gamma0 = 0.0;
    out.right.gamma1 = ga1 * std::pow(2.0, a) * u.w_value(1.0);
    out.left.gamma0 = 0.0;
    out.left.gamma1 = ga1 * std::pow(2.0, a) * u.w_value(-1.0);
  }
  return out;
}

// ---- pointwise fractional Laplacian ----------------------------------------

PointValue fraclap_pv(const SmoothFunc1D& u, double x, double a,
                      const FracLapOptions& opts) {
  if (!(a > 0.0 && a < 1.0))
    throw std::invalid_argument("fraclap_pv: a must lie in (0, 1)");
  double r = u.analyticity_radius(x);
  if (r <= opts.boundary_guard)
    throw std::invalid_argument(
        "fraclap_pv: x too close to a boundary singularity");

  PointValue out;
  const double support = u.support_radius();
  const double ux = u.value_edge(x, 1.0 - x, 1.0 + x);

  // near field: 2u(x) - u(x+h) - u(x-h) = -2 sum_k u^{(2k)}(x) h^{2k}/(2k)!
  constexpr int kTaylorPairs = 5;  // derivatives through order 10
  double h0 = std::min(r / 6.0, 0.15);
  double deriv[2 * kTaylorPairs + 1];
  u.taylor(x, 2 * kTaylorPairs, deriv);
  out.evaluations += 2 * kTaylorPairs + 1;
  double near = 0.0;
  double fact = 1.0;
  double last_term = 0.0;
  for (int k = 1; k <= kTaylorPairs; ++k) {
    fact *= (2.0 * k - 1.0) * (2.0 * k);
    last_term = -2.0 * deriv[2 * k] / fact * std::pow(h0, 2.0 * k - 2.0 * a) /
                (2.0 * k - 2.0 * a);
    near += last_term;
  }
  // geometric tail estimate: the expansion ratio is (h0/r)^2 <= 1/36
  double near_err = std::abs(last_term) / 36.0 / (1.0 - 1.0 / 36.0);

  // far field: integrable-singularity quadrature between breakpoints
  std::vector<double> breaks{h0};
  double h_all = 0.0;  // beyond this both u(x+h) and u(x-h) vanish
  for (double sgn : {1.0, -1.0}) {
    double edge = sgn > 0 ? (support - x) : (support + x);
    if (edge > h0) breaks.push_back(edge);
    h_all = std::max(h_all, edge);
  }
  h_all = std::max(h_all, h0);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  double one_minus_x = 1.0 - x, one_plus_x = 1.0 + x;
  auto difference = [&](double h) {
    double up = u.value_edge(x + h, one_minus_x - h, one_plus_x + h);
    double um = u.value_edge(x - h, one_minus_x + h, one_plus_x - h);
    return 2.0 * ux - up - um;
  };

  double far = 0.0, far_err = 0.0;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    double lo = breaks[i], hi = breaks[i + 1];
    if (hi <= lo) continue;
    IntegralResult seg = tanh_sinh(
        [&](double h, double, double) {
          out.evaluations += 2;
          return difference(h) / std::pow(h, 1.0 + 2.0 * a);
        },
        lo, hi, opts.quad_tol, 10);
    far += seg.value;
    far_err += seg.error_estimate;
    if (out.evaluations > opts.max_evaluations) break;
  }
  // exact tail: u vanishes past the support, leaving 2 u(x) h^{-1-2a}
  double tail = 2.0 * ux * std::pow(h_all, -2.0 * a) / (2.0 * a);

  double cna = frac_constant(a);
  out.value = cna * (near + far + tail);
  out.error_estimate = cna * (near_err + far_err);
  return out;
}

// ---- drift powers via the Bessel-potential kernel --------------------------

namespace {

struct DriftContext {
  double theta;  // c/2
  double m;
  double s;  // 1 - a
  const SmoothFunc1D* u;
  double quad_tol;
  long evaluations = 0;
  double worst_quad_error = 0.0;

  // g(x) = int kappa(x - y) e^{-theta y} u(y) dy over the support
  double g(double x) {
    double support = u->support_radius();
    auto integrand = [&](double y, double dist_x) {
      ++evaluations;
      // below this distance the kernel mass delta^{2s}/(2s) is beyond double
      // precision anyway; dropping it keeps z^{2s-1} representable
      if (dist_x < 1e-280) return 0.0;
      double uy = u->value_edge(y, 1.0 - y, 1.0 + y);
      if (uy == 0.0) return 0.0;
      return bessel_potential_kernel(dist_x, m, s) * std::exp(-theta * y) * uy;
    };
    double total = 0.0, err = 0.0;
    if (x > -support && x < support) {
      IntegralResult left = tanh_sinh(
          [&](double y, double, double dhi) { return integrand(y, dhi); },
          -support, x, quad_tol, 10);
      IntegralResult right = tanh_sinh(
          [&](double y, double dlo, double) { return integrand(y, dlo); },
          x, support, quad_tol, 10);
      total = left.value + right.value;
      err = left.error_estimate + right.error_estimate;
    } else {
      IntegralResult whole = tanh_sinh(
          [&](double y, double, double) { return integrand(y, std::abs(x - y)); },
          -support, support, quad_tol, 10);
      total = whole.value;
      err = whole.error_estimate;
    }
    worst_quad_error = std::max(worst_quad_error, err);
    return total;
  }
};

}  // namespace

PointValue drift_power_apply(const SmoothFunc1D& u, double x, double a,
                             double c, double c0, const DriftOptions& opts) {
  double m2 = c0 + 0.25 * c * c;
  if (!(m2 > 0.0))
    throw std::invalid_argument(
        "drift_power_apply: c0 + c^2/4 must be positive");
  double support = u.support_radius();
  if (std::abs(x) >= support - opts.boundary_guard)
    throw std::invalid_argument("drift_power_apply: x too close to the edge");

  DriftContext ctx{0.5 * c, std::sqrt(m2), 1.0 - a, &u, opts.quad_tol};

  double h = std::min(opts.fd_step, (support - std::abs(x)) / 4.0);
  double g0 = ctx.g(x);
  double gp = ctx.g(x + h), gm = ctx.g(x - h);
  double gp2 = ctx.g(x + 0.5 * h), gm2 = ctx.g(x - 0.5 * h);
  double d_h = (gp - 2.0 * g0 + gm) / (h * h);
  double d_h2 = (gp2 - 2.0 * g0 + gm2) / (0.25 * h * h);
  double second = (4.0 * d_h2 - d_h) / 3.0;

  if (ctx.worst_quad_error > 1e-5)
    throw std::runtime_error(
        "drift_power_apply: convolution quadrature did not converge "
        "(achieved error " +
        std::to_string(ctx.worst_quad_error) + ")");

  PointValue out;
  double amp = std::exp(ctx.theta * x);
  out.value = amp * (m2 * g0 - second);
  out.error_estimate =
      amp * (std::abs(d_h2 - d_h) / 3.0 * 0.25 +
             ctx.worst_quad_error * (m2 + 6.0 / (h * h)));
  out.evaluations = ctx.evaluations;
  if (out.evaluations > opts.max_evaluations)
    throw std::runtime_error("drift_power_apply: evaluation budget exceeded");
  return out;
}

// ---- Green identities -------------------------------------------------------

namespace {

// exponent of the leftover edge factor in (integrand / (1-x^2)^{a-1})
int cofactor_exponent(const EdgeFunction1D& f, double a) {
  double e = f.mu() - (a - 1.0);
  int rounded = static_cast<int>(std::lround(e));
  if (std::abs(e - rounded) > 1e-9 || rounded < 0 || rounded > 1)
    throw std::invalid_argument("greens residual: mu must equal a-1 or a");
  return rounded;
}

struct PairApply {
  std::function<PointValue(double)> pu;   // P u at a node
  std::function<PointValue(double)> pv;   // P* v at a node
};

GreensReport greens_weighted_pairing(const EdgeFunction1D& u,
                                     const EdgeFunction1D& v, double a,
                                     const PairApply& apply,
                                     const GreensOptions& opts,
                                     double min_edge_distance) {
  auto t0 = now();
  GreensReport rep;
  rep.a = a;
  rep.u_desc = u.describe();
  rep.v_desc = v.describe();

  int eu = cofactor_exponent(u, a);
  int ev = cofactor_exponent(v, a);

  std::vector<int> levels = opts.node_levels;
  if (levels.empty()) levels = {16, 24, 32, 40};

  long evals = 0;
  std::vector<double> values;
  for (int n : levels) {
    QuadratureRule rule = gauss_jacobi(n, a - 1.0, a - 1.0);
    // skip levels whose innermost node violates the pointwise guards
    if (1.0 - std::abs(rule.nodes.front()) < min_edge_distance ||
        1.0 - std::abs(rule.nodes.back()) < min_edge_distance)
      continue;
    std::vector<double> fvals(n, 0.0);
    std::vector<long> fevals(n, 0);
    parallel_for(n, opts.jobs, [&](long i) {
      double xi = rule.nodes[i];
      PointValue pu = apply.pu(xi);
      PointValue pv = apply.pv(xi);
      double om = 1.0 - xi, op = 1.0 + xi;
      double wu = u.w_value(xi) * ((eu == 1) ? om * op : 1.0);
      double wv = v.w_value(xi) * ((ev == 1) ? om * op : 1.0);
      fvals[i] = pu.value * wv - wu * pv.value;
      fevals[i] = pu.evaluations + pv.evaluations;
    });
    CompensatedSum acc;
    for (int i = 0; i < n; ++i) {
      acc.add(rule.weights[i] * fvals[i]);
      evals += fevals[i];
    }
    values.push_back(acc.value());
  }
  if (values.empty())
    throw std::runtime_error("greens residual: no usable quadrature level");

  rep.lhs = values.back();
  rep.lhs_error = values.size() > 1
                      ? std::abs(values.back() - values[values.size() - 2])
                      : std::abs(values.back());
  rep.evaluations = evals;
  rep.runtime_ms = ms_since(t0);
  return rep;
}

}  // namespace

GreensReport greens_residual_fraclap(const EdgeFunction1D& u,
                                     const EdgeFunction1D& v, double a,
                                     const GreensOptions& opts) {
  if (!(a > 0.5 && a < 1.0))
    throw std::invalid_argument(
        "greens_residual_fraclap: requires 1/2 < a < 1 (below 1/2 the pairing "
        "exists only as a duality, not implemented)");

  PairApply apply{
      [&](double x) { return fraclap_pv(u, x, a, opts.fraclap); },
      [&](double x) { return fraclap_pv(v, x, a, opts.fraclap); }};
  GreensReport rep = greens_weighted_pairing(u, v, a, apply, opts,
                                             opts.fraclap.boundary_guard);

  EndpointTraces tu = weighted_traces(u, a);
  EndpointTraces tv = weighted_traces(v, a);
  rep.rhs = (tu.right.gamma1 * tv.right.gamma0 -
             tu.right.gamma0 * tv.right.gamma1) +
            (tu.left.gamma1 * tv.left.gamma0 - tu.left.gamma0 * tv.left.gamma1);
  rep.rhs_without_drift_term = rep.rhs;
  rep.residual = std::abs(rep.lhs - rep.rhs);
  return rep;
}

GreensReport greens_residual_drift(const EdgeFunction1D& u,
                                   const EdgeFunction1D& v, double a, double c,
                                   double c0, const GreensOptions& opts) {
  if (!(a > 0.5 && a < 1.0))
    throw std::invalid_argument("greens_residual_drift: requires 1/2 < a < 1");

  GreensOptions run = opts;
  if (run.node_levels.empty()) run.node_levels = {12, 16, 24};

  PairApply apply{
      [&](double x) { return drift_power_apply(u, x, a, c, c0, run.drift); },
      // adjoint for real constant coefficients: c -> -c
      [&](double x) { return drift_power_apply(v, x, a, -c, c0, run.drift); }};
  GreensReport rep =
      greens_weighted_pairing(u, v, a, apply, run, run.drift.boundary_guard);
  rep.c = c;
  rep.c0 = c0;

  EndpointTraces tu = weighted_traces(u, a);
  EndpointTraces tv = weighted_traces(v, a);
  double flat = (tu.right.gamma1 * tv.right.gamma0 -
                 tu.right.gamma0 * tv.right.gamma1) +
                (tu.left.gamma1 * tv.left.gamma0 -
                 tu.left.gamma0 * tv.left.gamma1);
  // c_nu = c . nu with the interior normal: -c at x = +1, +c at x = -1
  double drift_term = -a * ((-c) * tu.right.gamma0 * tv.right.gamma0 +
                            (+c) * tu.left.gamma0 * tv.left.gamma0);
  rep.rhs_without_drift_term = flat;
  rep.rhs = flat + drift_term;
  rep.residual = std::abs(rep.lhs - rep.rhs);
  return rep;
}

}  // namespace fracgreen
