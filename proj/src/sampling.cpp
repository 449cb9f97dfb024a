#include "fracgreen/sampling.hpp"

namespace fracgreen {

OperatorJet sample_elliptic_jet(Rng& rng, int n, double margin,
                                double da_scale, double drift_scale) {
  std::vector<double> R(n * n);
  for (double& v : R) v = rng.uniform(-1.0, 1.0);
  std::vector<cplx> A(n * n, 0.0);
  double trace = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int m = 0; m < n; ++m) s += R[m * n + j] * R[m * n + k];
      A[j * n + k] = s;
      if (j == k) trace += s;
    }
  for (auto& v : A) v *= n / std::max(trace, 1e-3);
  for (int j = 0; j < n; ++j) A[j * n + j] += margin + 0.05;
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      cplx q = cplx(0.0, rng.uniform(-0.15, 0.15));
      A[j * n + k] += q;
      if (k != j) A[k * n + j] += q;
    }
  std::vector<std::vector<cplx>> dA(n, std::vector<cplx>(n * n, 0.0));
  for (int m = 0; m < n; ++m)
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) {
        cplx v = da_scale * rng.uniform_complex(1.0);
        dA[m][j * n + k] += v;
        if (k != j) dA[m][k * n + j] += v;
      }
  std::vector<cplx> b(n);
  for (auto& v : b) v = drift_scale * rng.uniform_complex(1.0);
  return make_operator_jet(n, std::move(A), std::move(dA), std::move(b),
                           rng.uniform_complex(1.0), margin);
}

std::vector<double> sample_xi_prime(Rng& rng, int n_minus_1, double lo,
                                    double hi) {
  std::vector<double> xi(n_minus_1);
  double norm = 0.0;
  for (double& v : xi) {
    v = rng.uniform(-1.0, 1.0);
    norm += v * v;
  }
  norm = std::sqrt(norm);
  double target = rng.uniform(lo, hi);
  for (double& v : xi) v *= target / std::max(norm, 1e-9);
  return xi;
}

std::vector<double> sample_xi(Rng& rng, int n) {
  std::vector<double> xi(n);
  double norm = 0.0;
  for (double& v : xi) {
    v = rng.uniform(-1.0, 1.0);
    norm += v * v;
  }
  if (norm < 1e-4) xi[0] += 1.0;
  return xi;
}

}  // namespace fracgreen
