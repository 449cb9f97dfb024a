#include "fracgreen/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fracgreen {

namespace {

QuadratureRule compute_gauss_legendre(int n) {
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev initial guess, Newton refinement on P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

// P_n^{(alpha,beta)}(x) and derivative by the three-term recurrence.
void jacobi_eval(int n, double alpha, double beta, double x, double* p,
                 double* dp, double* p_next) {
  double pm1 = 1.0;
  double pc = 0.5 * (alpha + beta + 2.0) * x + 0.5 * (alpha - beta);
  if (n == 0) {
    pc = pm1;
    pm1 = 0.0;
  }
  for (int k = 1; k < n; ++k) {
    double a1 = 2.0 * (k + 1.0) * (k + alpha + beta + 1.0) *
                (2.0 * k + alpha + beta);
    double a2 = (2.0 * k + alpha + beta + 1.0) * (alpha * alpha - beta * beta);
    double a3 = (2.0 * k + alpha + beta) * (2.0 * k + alpha + beta + 1.0) *
                (2.0 * k + alpha + beta + 2.0);
    double a4 = 2.0 * (k + alpha) * (k + beta) * (2.0 * k + alpha + beta + 2.0);
    double pn = ((a2 + a3 * x) * pc - a4 * pm1) / a1;
    pm1 = pc;
    pc = pn;
  }
  *p = pc;
  // derivative relation
  if (n == 0) {
    *dp = 0.0;
  } else {
    double s = 2.0 * n + alpha + beta;
    *dp = (n * ((alpha - beta) - s * x) * pc +
           2.0 * (n + alpha) * (n + beta) * pm1) /
          (s * (1.0 - x * x));
  }
  if (p_next) {
    int k = n;
    if (n == 0) {
      *p_next = 0.5 * (alpha + beta + 2.0) * x + 0.5 * (alpha - beta);
    } else {
      double a1 = 2.0 * (k + 1.0) * (k + alpha + beta + 1.0) *
                  (2.0 * k + alpha + beta);
      double a2 = (2.0 * k + alpha + beta + 1.0) * (alpha * alpha - beta * beta);
      double a3 = (2.0 * k + alpha + beta) * (2.0 * k + alpha + beta + 1.0) *
                  (2.0 * k + alpha + beta + 2.0);
      double a4 =
          2.0 * (k + alpha) * (k + beta) * (2.0 * k + alpha + beta + 2.0);
      *p_next = ((a2 + a3 * x) * pc - a4 * pm1) / a1;
    }
  }
}

}  // namespace

const QuadratureRule& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  static std::map<int, QuadratureRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

QuadratureRule gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: n must be >= 1");
  if (alpha <= -1.0 || beta <= -1.0)
    throw std::invalid_argument("gauss_jacobi: alpha, beta must be > -1");

  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  // Weight prefactor:
  //   G = -(2n+a+b+2) Gamma(n+a+1) Gamma(n+b+1) 2^{a+b}
  //       / [(n+a+b+1) Gamma(n+a+b+1) Gamma(n+2)]
  // and w_j = G / (P'_n(x_j) P_{n+1}(x_j)).
  double lg = std::lgamma(n + alpha + 1.0) + std::lgamma(n + beta + 1.0) -
              std::lgamma(n + alpha + beta + 1.0) - std::lgamma(n + 2.0);
  double gfac = -(2.0 * n + alpha + beta + 2.0) /
                (n + alpha + beta + 1.0) * std::exp(lg) *
                std::pow(2.0, alpha + beta);

  for (int i = 1; i <= n; ++i) {
    double x = std::cos(kPi * (0.5 * alpha + i - 0.25) /
                        (0.5 * (1.0 + alpha + beta) + n));
    double p = 0.0, dp = 0.0, pn1 = 0.0;
    for (int it = 0; it < 200; ++it) {
      jacobi_eval(n, alpha, beta, x, &p, &dp, &pn1);
      if (dp == 0.0) break;
      double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    jacobi_eval(n, alpha, beta, x, &p, &dp, &pn1);
    rule.nodes[i - 1] = x;
    rule.weights[i - 1] = gfac / (dp * pn1);
    if (!(rule.weights[i - 1] > 0.0))
      throw std::runtime_error("gauss_jacobi: nonpositive weight (bad root?)");
  }
  // ascending order
  for (int i = 0; i < n / 2; ++i) {
    std::swap(rule.nodes[i], rule.nodes[n - 1 - i]);
    std::swap(rule.weights[i], rule.weights[n - 1 - i]);
  }
  return rule;
}

IntegralResult tanh_sinh(const SingularIntegrand& f, double lo, double hi,
                         double tol, int max_level) {
  if (!(hi > lo)) throw std::invalid_argument("tanh_sinh: empty interval");
  double rad = 0.5 * (hi - lo);
  double mid = 0.5 * (hi + lo);
  // Large enough that even x^p with p -> -1 has fully-captured endpoint mass;
  // nodes past the useful range cost almost nothing (the weight underflows).
  const double tmax = 9.5;

  // evaluate the transformed integrand at parameter t
  auto eval = [&](double t) {
    double u = 0.5 * kPi * std::sinh(t);
    // distances to the endpoints without cancellation or overflow:
    // x - lo = rad (1 + tanh u) = 2 rad / (1 + e^{-2u})
    // hi - x = rad (1 - tanh u) = 2 rad e^{-2u} / (1 + e^{-2u})
    double d_lo, d_hi;
    if (u >= 0.0) {
      double e = std::exp(-2.0 * u);
      d_lo = 2.0 * rad / (1.0 + e);
      d_hi = 2.0 * rad * e / (1.0 + e);
    } else {
      double e = std::exp(2.0 * u);
      d_lo = 2.0 * rad * e / (1.0 + e);
      d_hi = 2.0 * rad / (1.0 + e);
    }
    double ch = std::cosh(u);
    double w = 0.5 * kPi * std::cosh(t) / (ch * ch);
    double x = mid + rad * std::tanh(u);
    if (d_lo <= 0.0 || d_hi <= 0.0 || !(w > 0.0)) return 0.0;
    return rad * w * f(x, d_lo, d_hi);
  };

  IntegralResult out;
  double h = 1.0;
  CompensatedSum sum;
  sum.add(eval(0.0));
  ++out.evaluations;
  for (double t = h; t <= tmax; t += h) {
    sum.add(eval(t));
    sum.add(eval(-t));
    out.evaluations += 2;
  }
  double prev = h * sum.value();
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    for (double t = h; t <= tmax; t += 2.0 * h) {
      sum.add(eval(t));
      sum.add(eval(-t));
      out.evaluations += 2;
    }
    double cur = h * sum.value();
    out.error_estimate = std::abs(cur - prev);
    prev = cur;
    if (level >= 3 && out.error_estimate <= tol) break;
  }
  out.value = prev;
  return out;
}

IntegralResult integrate_adaptive(const std::function<double(double)>& f,
                                  double lo, double hi, double tol,
                                  int max_segments) {
  const QuadratureRule& rule = gauss_legendre(15);
  auto gl = [&](double a, double b) {
    double mid = 0.5 * (a + b), rad = 0.5 * (b - a);
    CompensatedSum s;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
      s.add(rad * rule.weights[i] * f(mid + rad * rule.nodes[i]));
    return s.value();
  };

  struct Seg {
    double a, b, whole;
  };
  std::vector<Seg> stack{{lo, hi, gl(lo, hi)}};
  IntegralResult out;
  out.evaluations = 15;
  int segments = 1;
  CompensatedSum total;
  CompensatedSum err;
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    double m = 0.5 * (s.a + s.b);
    double left = gl(s.a, m), right = gl(m, s.b);
    out.evaluations += 30;
    double delta = std::abs(left + right - s.whole);
    if (delta <= tol * std::max(1.0, (s.b - s.a) / (hi - lo)) ||
        segments >= max_segments || (s.b - s.a) < 1e-14 * (hi - lo)) {
      total.add(left);
      total.add(right);
      err.add(delta);
    } else {
      segments += 1;
      stack.push_back({s.a, m, left});
      stack.push_back({m, s.b, right});
    }
  }
  out.value = total.value();
  out.error_estimate = err.value();
  return out;
}

}  // namespace fracgreen
