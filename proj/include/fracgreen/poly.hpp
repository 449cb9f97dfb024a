#pragma once

#include <span>
#include <vector>

#include "fracgreen/numeric.hpp"

namespace fracgreen {

/// Univariate polynomial in the normal frequency variable, complex
/// coefficients, coefficient index = power. The zero polynomial has an empty
/// coefficient list and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(cplx v) { return Poly({v}); }
  static Poly variable() { return Poly({cplx(0.0), cplx(1.0)}); }
  static Poly from_roots(std::span<const cplx> roots, cplx lead = 1.0);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  cplx lead() const { return c_.empty() ? cplx(0.0) : c_.back(); }
  cplx coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : cplx(0.0);
  }
  const std::vector<cplx>& coeffs() const { return c_; }
  double coeff_scale() const;

  cplx eval(cplx x) const;
  Poly derivative() const;
  Poly monic() const;

  /// Taylor coefficients around x0: returns g with p(x0 + e) = sum g[k] e^k,
  /// k = 0..order (exact shift via repeated synthetic division).
  std::vector<cplx> taylor_at(cplx x0, int order) const;

  /// Deflation by a root: returns quotient of p / (x - r), dropping the
  /// remainder (caller guarantees r is a root to working accuracy).
  Poly deflate(cplx r) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(cplx s, const Poly& a);

  /// Euclidean division a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

 private:
  void trim();
  std::vector<cplx> c_;
};

}  // namespace fracgreen
