#include "fracgreen/powsym.hpp"

#include <stdexcept>

namespace fracgreen {

namespace {

cplx quadratic_form(const OperatorJet& jet, const std::vector<double>& x,
                    const std::vector<double>& y) {
  cplx acc = 0.0;
  for (int j = 0; j < jet.n; ++j)
    for (int k = 0; k < jet.n; ++k) acc += jet.a(j, k) * x[j] * y[k];
  return acc;
}

cplx dx_quadratic_form(const OperatorJet& jet, int m,
                       const std::vector<double>& xi) {
  cplx acc = 0.0;
  for (int j = 0; j < jet.n; ++j)
    for (int k = 0; k < jet.n; ++k) acc += jet.da(m, j, k) * xi[j] * xi[k];
  return acc;
}

// ((A + A^T) xi)_j
cplx dxi_l0(const OperatorJet& jet, int j, const std::vector<double>& xi) {
  cplx acc = 0.0;
  for (int k = 0; k < jet.n; ++k) acc += (jet.a(j, k) + jet.a(k, j)) * xi[k];
  return acc;
}

// sum_j i dxi_j(l0) dx_j(l0), the numerator of the second p1 term
cplx derivative_pairing(const OperatorJet& jet, const std::vector<double>& xi) {
  cplx acc = 0.0;
  for (int j = 0; j < jet.n; ++j)
    acc += kImag * dxi_l0(jet, j, xi) * dx_quadratic_form(jet, j, xi);
  return acc;
}

std::vector<double> sphere_direction(int n, int index, Rng& rng) {
  std::vector<double> d(n);
  if (n == 2) {
    double th = kPi * index / 32.0;
    d[0] = std::cos(th);
    d[1] = std::sin(th);
    return d;
  }
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (int j = 0; j < n; ++j) {
      // Box-Muller from the deterministic stream
      double u1 = rng.uniform(1e-12, 1.0), u2 = rng.uniform(0.0, 1.0);
      d[j] = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
      norm2 += d[j] * d[j];
    }
  } while (norm2 < 1e-12);
  double inv = 1.0 / std::sqrt(norm2);
  for (double& v : d) v *= inv;
  return d;
}

}  // namespace

OperatorJet make_operator_jet(int n, std::vector<cplx> A,
                              std::vector<std::vector<cplx>> dA,
                              std::vector<cplx> b, cplx b0,
                              double ellipticity_margin) {
  if (n < 1) throw std::invalid_argument("OperatorJet: dimension must be >= 1");
  if (static_cast<int>(A.size()) != n * n)
    throw std::invalid_argument("OperatorJet: A must be n x n");
  if (dA.empty()) dA.assign(n, std::vector<cplx>(n * n, 0.0));
  if (static_cast<int>(dA.size()) != n)
    throw std::invalid_argument("OperatorJet: dA must hold n matrices");
  for (const auto& m : dA)
    if (static_cast<int>(m.size()) != n * n)
      throw std::invalid_argument("OperatorJet: dA entries must be n x n");
  if (b.empty()) b.assign(n, 0.0);
  if (static_cast<int>(b.size()) != n)
    throw std::invalid_argument("OperatorJet: b must have n entries");
  if (!(ellipticity_margin > 0.0))
    throw std::invalid_argument("OperatorJet: ellipticity margin must be > 0");

  OperatorJet jet{n, std::move(A), std::move(dA), std::move(b), b0,
                  ellipticity_margin};

  Rng rng(0x5e11ab1eULL + static_cast<std::uint64_t>(n));
  for (int s = 0; s < 64; ++s) {
    std::vector<double> d = sphere_direction(n, s, rng);
    cplx q = quadratic_form(jet, d, d);
    if (std::real(q) < jet.ellipticity_margin * (1.0 - 1e-12))
      throw std::invalid_argument(
          "OperatorJet: strong ellipticity violated on sampled sphere");
  }
  return jet;
}

OperatorJet make_constant_jet(int n, std::vector<cplx> A, std::vector<cplx> b,
                              cplx b0, double ellipticity_margin) {
  return make_operator_jet(n, std::move(A), {}, std::move(b), b0,
                           ellipticity_margin);
}

SymbolParts symbol_parts(const OperatorJet& jet, const std::vector<double>& xi) {
  SymbolParts out;
  out.l0 = quadratic_form(jet, xi, xi);
  cplx bxi = 0.0;
  for (int j = 0; j < jet.n; ++j) bxi += jet.b[j] * xi[j];
  out.l1 = kImag * bxi;
  out.l2 = jet.b0;
  return out;
}

ParametrixTerms parametrix_terms(const OperatorJet& jet,
                                 const std::vector<double>& xi, cplx lambda) {
  cplx l0 = quadratic_form(jet, xi, xi);
  double xi2 = 0.0;
  for (double v : xi) xi2 += v * v;
  if (std::abs(lambda - l0) < 1e-8 * (1.0 + std::abs(lambda) + xi2))
    throw std::invalid_argument("parametrix_terms: lambda too close to l0");

  cplx res = 1.0 / (l0 - lambda);
  cplx bxi = 0.0;
  for (int j = 0; j < jet.n; ++j) bxi += jet.b[j] * xi[j];
  ParametrixTerms out;
  out.principal = res;
  out.correction =
      -kImag * bxi * res * res - derivative_pairing(jet, xi) * res * res * res;
  return out;
}

PowerSymbol power_symbol(const OperatorJet& jet, const std::vector<double>& xi,
                         double a) {
  double xi2 = 0.0;
  for (double v : xi) xi2 += v * v;
  if (xi2 == 0.0) throw std::invalid_argument("power_symbol: xi must be nonzero");

  cplx l0 = quadratic_form(jet, xi, xi);
  cplx bxi = 0.0;
  for (int j = 0; j < jet.n; ++j) bxi += jet.b[j] * xi[j];

  PowerSymbol out;
  out.p0 = std::pow(l0, a);
  out.p1 = out.p0 * (kImag * a * bxi / l0 -
                     binomial(a, 2) * derivative_pairing(jet, xi) / (l0 * l0));
  return out;
}

cplx power_symbol_contour(const OperatorJet& jet, const std::vector<double>& xi,
                          double a, int nodes) {
  double xi2 = 0.0;
  for (double v : xi) xi2 += v * v;
  if (xi2 == 0.0)
    throw std::invalid_argument("power_symbol_contour: xi must be nonzero");
  if (nodes < 8) throw std::invalid_argument("power_symbol_contour: nodes < 8");

  cplx l0 = quadratic_form(jet, xi, xi);
  // Circle of radius |l0|/2 when safely away from the branch cut of
  // lambda^a (the ray (-inf, 0]); otherwise shrink to stay clear of it.
  double cut_dist =
      (std::real(l0) >= 0.0) ? std::abs(l0) : std::abs(std::imag(l0));
  if (cut_dist <= 0.0)
    throw std::invalid_argument("power_symbol_contour: contour hits the cut");
  double rho = (std::real(l0) > std::abs(std::imag(l0)))
                   ? 0.5 * std::abs(l0)
                   : 0.5 * std::min(std::abs(l0), 0.9 * cut_dist);

  cplx bxi = 0.0;
  for (int j = 0; j < jet.n; ++j) bxi += jet.b[j] * xi[j];
  cplx dpair = derivative_pairing(jet, xi);

  // (i/2pi) contour-int lambda^a [ r - i b.xi r^2 - dpair r^3 ] d lambda,
  // r = (l0 - lambda)^{-1}, trapezoid on lambda = l0 + rho e^{i theta}.
  cplx acc = 0.0;
  for (int k = 0; k < nodes; ++k) {
    double th = 2.0 * kPi * k / nodes;
    cplx e = std::polar(1.0, th);
    cplx lambda = l0 + rho * e;
    cplx r = -1.0 / (rho * e);
    cplx f = std::pow(lambda, a) * (r - kImag * bxi * r * r - dpair * r * r * r);
    acc += f * e;
  }
  return -(rho / static_cast<double>(nodes)) * acc;
}

}  // namespace fracgreen
