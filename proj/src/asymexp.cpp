#include "fracgreen/asymexp.hpp"

#include <algorithm>
#include <stdexcept>

namespace fracgreen {

AsymptoticSum::AsymptoticSum(std::vector<RationalFn> terms, int remainder_order)
    : terms_(std::move(terms)), remainder_order_(remainder_order) {
  if (remainder_order_ < 1)
    throw std::invalid_argument("AsymptoticSum: remainder order must be >= 1");
  truncate();
}

AsymptoticSum AsymptoticSum::unit(int remainder_order) {
  return AsymptoticSum({RationalFn::one()}, remainder_order);
}

AsymptoticSum AsymptoticSum::single(RationalFn term, int remainder_order) {
  return AsymptoticSum({std::move(term)}, remainder_order);
}

void AsymptoticSum::truncate() {
  std::erase_if(terms_, [this](const RationalFn& r) {
    return r.is_zero() || r.order_at_infinity() <= -remainder_order_;
  });
}

int AsymptoticSum::max_order() const {
  int m = kOrderNegInf;
  for (const RationalFn& r : terms_) m = std::max(m, r.order_at_infinity());
  return terms_.empty() ? 0 : m;
}

cplx AsymptoticSum::eval(double x) const {
  cplx acc = 0.0;
  for (const RationalFn& r : terms_) acc += r.eval(x);
  return acc;
}

AsymptoticSum as_add(const AsymptoticSum& s1, const AsymptoticSum& s2) {
  std::vector<RationalFn> terms = s1.terms();
  terms.insert(terms.end(), s2.terms().begin(), s2.terms().end());
  return AsymptoticSum(std::move(terms),
                       std::min(s1.remainder_order(), s2.remainder_order()));
}

AsymptoticSum as_scale(cplx c, const AsymptoticSum& s) {
  std::vector<RationalFn> terms;
  terms.reserve(s.terms().size());
  for (const RationalFn& r : s.terms()) terms.push_back(c * r);
  return AsymptoticSum(std::move(terms), s.remainder_order());
}

AsymptoticSum as_mul(const AsymptoticSum& s1, const AsymptoticSum& s2) {
  // decay of the slowest term contaminating the other factor's remainder
  int decay1 = s1.terms().empty() ? 0x1000 : -s1.max_order();
  int decay2 = s2.terms().empty() ? 0x1000 : -s2.max_order();
  int n = std::min({s1.remainder_order() + decay2, s2.remainder_order() + decay1,
                    s1.remainder_order() + s2.remainder_order()});
  std::vector<RationalFn> terms;
  for (const RationalFn& a : s1.terms())
    for (const RationalFn& b : s2.terms()) {
      if (a.order_at_infinity() + b.order_at_infinity() <= -n) continue;
      terms.push_back(a * b);
    }
  return AsymptoticSum(std::move(terms), n);
}

AsymptoticSum as_binomial_power(const AsymptoticSum& t, double a) {
  for (const RationalFn& r : t.terms())
    if (r.order_at_infinity() > -1)
      throw std::invalid_argument(
          "as_binomial_power: every term of t must be O(x^{-1})");
  int n = t.remainder_order();
  AsymptoticSum acc = AsymptoticSum::unit(n);
  AsymptoticSum power = AsymptoticSum::unit(n);
  for (int k = 1; k <= n - 1; ++k) {
    power = as_mul(power, t);
    double ck = binomial(a, k);
    if (ck == 0.0) continue;
    acc = as_add(acc, as_scale(ck, power));
  }
  return AsymptoticSum(acc.terms(), n);
}

cplx as_jump(const AsymptoticSum& s) {
  if (s.remainder_order() < 2)
    throw std::invalid_argument(
        "as_jump: remainder order < 2 does not determine the jump");
  cplx acc = 0.0;
  for (const RationalFn& r : s.terms()) {
    if (r.order_at_infinity() > 0)
      throw std::invalid_argument("as_jump: term grows at infinity");
    acc += jump(r);
  }
  return acc;
}

}  // namespace fracgreen
