#pragma once

#include <vector>

#include "fracgreen/ratfun.hpp"

namespace fracgreen {

/// Finite sum of rational terms plus an explicit remainder marker:
/// the represented object equals sum(terms) + O(x^{-remainder_order}) as the
/// normal frequency goes to infinity. Terms at or below the remainder order
/// are dropped into the remainder; terms are kept in unreduced list form and
/// compared by evaluation, not canonical form.
class AsymptoticSum {
 public:
  AsymptoticSum() = default;
  AsymptoticSum(std::vector<RationalFn> terms, int remainder_order);

  static AsymptoticSum unit(int remainder_order = 2);
  static AsymptoticSum single(RationalFn term, int remainder_order = 2);

  const std::vector<RationalFn>& terms() const { return terms_; }
  int remainder_order() const { return remainder_order_; }

  /// Largest order among terms (0 for an empty sum).
  int max_order() const;

  /// Evaluate the finite part at a real point (test/diagnostic support).
  cplx eval(double x) const;

 private:
  void truncate();
  std::vector<RationalFn> terms_;
  int remainder_order_ = 2;
};

AsymptoticSum as_add(const AsymptoticSum& s1, const AsymptoticSum& s2);
AsymptoticSum as_scale(cplx c, const AsymptoticSum& s);

/// Truncated product; the remainder order accounts for cross-contamination
/// of each factor's remainder with the other's slowest-decaying term.
AsymptoticSum as_mul(const AsymptoticSum& s1, const AsymptoticSum& s2);

/// (1 + t)^a = sum_k C(a,k) t^k, truncated at t's remainder order.
/// Every term of t must have order at infinity <= -1.
AsymptoticSum as_binomial_power(const AsymptoticSum& t, double a);

/// Sum of the per-term inverse-transform jumps. Requires remainder order
/// >= 2 (terms that are O(x^{-2}) transform to continuous functions, jump 0,
/// so the representation determines the jump). Order-0 constant parts are
/// delta contributions and are excluded by the jump functional itself.
cplx as_jump(const AsymptoticSum& s);

}  // namespace fracgreen
