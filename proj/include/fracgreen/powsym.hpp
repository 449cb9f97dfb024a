#pragma once

#include <vector>

#include "fracgreen/numeric.hpp"

namespace fracgreen {

/// Pointwise data of the second-order operator
///   L = -sum a_jk d_j d_k + b . grad + b0
/// at one point: coefficient matrix A, its spatial derivatives dA[m] =
/// d_{x_m} A, drift vector b, zero-order coefficient b0, and the strong
/// ellipticity margin c with Re(xi^T A xi) >= c |xi|^2.
struct OperatorJet {
  int n = 0;
  std::vector<cplx> A;                // n x n, row-major
  std::vector<std::vector<cplx>> dA;  // n matrices, each n x n row-major
  std::vector<cplx> b;
  cplx b0 = 0.0;
  double ellipticity_margin = 0.0;

  cplx a(int j, int k) const { return A[j * n + k]; }
  cplx da(int m, int j, int k) const { return dA[m][j * n + k]; }
};

/// Validates shapes and checks strong ellipticity on 64 sampled directions;
/// throws std::invalid_argument on violation.
OperatorJet make_operator_jet(int n, std::vector<cplx> A,
                              std::vector<std::vector<cplx>> dA,
                              std::vector<cplx> b, cplx b0,
                              double ellipticity_margin);

/// Convenience: constant-coefficient jet (dA = 0).
OperatorJet make_constant_jet(int n, std::vector<cplx> A, std::vector<cplx> b,
                              cplx b0, double ellipticity_margin);

struct SymbolParts {
  cplx l0;  // xi^T A xi
  cplx l1;  // i b . xi
  cplx l2;  // b0
};

SymbolParts symbol_parts(const OperatorJet& jet, const std::vector<double>& xi);

struct ParametrixTerms {
  cplx principal;   // (l0 - lambda)^{-1}
  cplx correction;  // next resolvent-parametrix term
};

/// First two resolvent parametrix terms at (xi, lambda). Requires lambda
/// away from l0: |lambda - l0| >= 1e-8 (1 + |lambda| + |xi|^2).
ParametrixTerms parametrix_terms(const OperatorJet& jet,
                                 const std::vector<double>& xi, cplx lambda);

struct PowerSymbol {
  cplx p0;  // l0^a
  cplx p1;  // l0^a (i a b.xi l0^{-1} - C(a,2) sum_j i dxi_j l0 dx_j l0 l0^{-2})
};

/// Two-term symbol of L^a in closed form (principal branch of l0^a; valid
/// since strong ellipticity keeps l0 in the right half-plane). xi != 0.
PowerSymbol power_symbol(const OperatorJet& jet, const std::vector<double>& xi,
                         double a);

/// Independent oracle: trapezoid evaluation of the Cauchy integral
/// (i/2pi) contour-int lambda^a [resolvent parametrix terms] d lambda on a
/// circle around l0 (nodes points; spectrally accurate). Returns the p0 + p1
/// approximation.
cplx power_symbol_contour(const OperatorJet& jet, const std::vector<double>& xi,
                          double a, int nodes);

}  // namespace fracgreen
