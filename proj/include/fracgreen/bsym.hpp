#pragma once

#include <vector>

#include "fracgreen/asymexp.hpp"
#include "fracgreen/powsym.hpp"

namespace fracgreen {

/// Operator jet at a boundary point in boundary-normal coordinates (the
/// normal is the n-th axis), together with a tangential frequency xi' with
/// |xi'| >= 1 (results are stated for that range only).
struct BoundaryJet {
  OperatorJet jet;
  std::vector<double> xi_prime;  // n-1 entries

  double xi_prime_norm() const;
  double bracket() const;  // <xi'> = sqrt(1 + |xi'|^2)
};

BoundaryJet make_boundary_jet(OperatorJet jet, std::vector<double> xi_prime);

struct SigmaRoots {
  cplx sigma_plus;   // +i sigma_plus is the root of l0 in the upper half-plane
  cplx sigma_minus;  // -i sigma_minus is the root in the lower half-plane
};

/// Roots of the principal symbol in the normal frequency at fixed xi',
/// split by half-plane; Re sigma_pm > 0 under strong ellipticity.
SigmaRoots sigma_roots(const BoundaryJet& bj);

/// Structured first-order boundary symbol:
///   b(xi') = c0 + sum_j c_tan[j] i xi_j + sum_j c_nonlocal[j] i xi_j <xi'>^{-1}
struct BoundarySymbol {
  cplx c0 = 0.0;
  std::vector<cplx> c_tan;       // n-1 entries, local first-order part
  std::vector<cplx> c_nonlocal;  // n-1 entries, <xi'>^{-1}-weighted part

  cplx eval(const std::vector<double>& xi_prime) const;
  double coefficient_scale() const;
};

enum class Locality { local, nonlocal };

/// Reduced symbol of the order-reduced operator at this boundary point,
/// normalized by a_nn^{-a}: returns 1 + (rational order -1 terms) + O(x^{-2})
/// assembled by the generic expansion pipeline (binomial factor, two-term
/// power symbol, first-order composition correction). Each reduction step's
/// dropped content is order-checked to be O(x^{-2}).
AsymptoticSum q_expansion(const BoundaryJet& bj, double a);

/// Closed-form boundary symbol from the jet data alone (no xi' needed).
BoundarySymbol boundary_symbol_closed(const OperatorJet& jet, double a);

/// a_nn^a times the jump of the expansion: must agree with the closed form
/// evaluated at xi' (relative 1e-10; the acceptance suite checks 1e-9).
cplx boundary_symbol_pipeline(const BoundaryJet& bj, double a);

/// Principal symbol of L^a at the interior normal: a_nn^a.
cplx s0(const OperatorJet& jet, double a);

/// Local iff all <xi'>^{-1}-weighted coefficients vanish (equivalently all
/// tangential derivatives of a_nn vanish at the point).
Locality classify_locality(const BoundarySymbol& b);

}  // namespace fracgreen
