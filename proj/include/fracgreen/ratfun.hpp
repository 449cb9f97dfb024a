#pragma once

#include <vector>

#include "fracgreen/poly.hpp"
#include "fracgreen/roots.hpp"

namespace fracgreen {

/// Order marker for the zero rational function ("-infinity").
inline constexpr int kOrderNegInf = -0x40000000;

/// Normalized rational function of the normal frequency variable:
/// monic denominator, numerator/denominator common roots cancelled, pole
/// factorization cached. All pole locations of pipeline inputs lie off the
/// real axis (strong ellipticity keeps them there).
class RationalFn {
 public:
  RationalFn() : num_(), den_(Poly::constant(1.0)) {}

  static RationalFn make(const Poly& num, const Poly& den);
  static RationalFn zero() { return RationalFn(); }
  static RationalFn one() { return constant(1.0); }
  static RationalFn constant(cplx v);
  /// coeff / (x - pole)^order
  static RationalFn pole_term(cplx coeff, cplx pole, int order = 1);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const std::vector<RootCluster>& poles() const { return poles_; }
  bool is_zero() const { return num_.is_zero(); }

  cplx eval(cplx x) const { return num_.eval(x) / den_.eval(x); }

  /// deg(num) - deg(den): the nu with r(x) x^{-nu} -> nonzero constant;
  /// kOrderNegInf for the zero function.
  int order_at_infinity() const;

  /// Coefficients of the expansion at infinity, r(x) = sum_k c_k x^{-k}
  /// starting at k = k0 = -order; returns c_1..c_count (c_k = 0 for k < k0).
  /// Requires order_at_infinity() <= 0.
  std::vector<cplx> expansion_at_infinity(int count) const;

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(cplx s, const RationalFn& a);

 private:
  Poly num_;
  Poly den_;
  std::vector<RootCluster> poles_;
};

struct PartialFractionTerm {
  cplx pole;
  int order;    // k in coeff / (x - pole)^k
  cplx coeff;
  bool upper_half;  // pole in the upper half-plane (support on z > 0 side)
};

struct PartialFractions {
  Poly poly_part;
  std::vector<PartialFractionTerm> terms;
};

/// r = poly_part + sum coeff/(x - pole)^k, verified by evaluation at five
/// real points (relative 1e-10). Throws if two distinct pole clusters are
/// too close to separate reliably.
PartialFractions partial_fractions(const RationalFn& r);

/// Jump at z = 0 of the inverse Fourier transform of the proper part of r.
/// Requires order_at_infinity(r) <= 0 and no (near-)real poles. Computed two
/// independent ways -- i * (coefficient of x^{-1} at infinity by polynomial
/// division) and i * (sum of order-1 partial fraction coefficients) -- which
/// must agree to 1e-12 relative.
cplx jump(const RationalFn& r);

}  // namespace fracgreen
