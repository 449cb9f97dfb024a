#include "fracgreen/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace fracgreen {

namespace {
// Relative threshold below which a stray leading coefficient left behind by
// floating-point cancellation is treated as zero.
constexpr double kTrimTol = 1e-11;
}  // namespace

void Poly::trim() {
  double scale = 0.0;
  for (const cplx& v : c_) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) {
    c_.clear();
    return;
  }
  while (!c_.empty() && std::abs(c_.back()) <= kTrimTol * scale) c_.pop_back();
}

double Poly::coeff_scale() const {
  double s = 0.0;
  for (const cplx& v : c_) s = std::max(s, std::abs(v));
  return s;
}

Poly Poly::from_roots(std::span<const cplx> roots, cplx lead) {
  std::vector<cplx> c{lead};  // highest-first while building
  for (const cplx& r : roots) {
    c.push_back(0.0);
    for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k)
      c[k] -= r * c[k - 1];
  }
  std::reverse(c.begin(), c.end());  // into index = power order
  return Poly(std::move(c));
}

cplx Poly::eval(cplx x) const {
  cplx acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<cplx> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) throw std::invalid_argument("Poly::monic: zero polynomial");
  std::vector<cplx> c = c_;
  cplx l = c.back();
  for (cplx& v : c) v /= l;
  return Poly(std::move(c));
}

std::vector<cplx> Poly::taylor_at(cplx x0, int order) const {
  // Repeated synthetic division; work[k] ends as the k-th shifted coefficient.
  std::vector<cplx> work = c_;
  if (work.empty()) work.push_back(0.0);
  std::vector<cplx> out(order + 1, 0.0);
  int n = static_cast<int>(work.size());
  for (int k = 0; k <= order && k < n; ++k) {
    for (int i = n - 2; i >= k; --i) work[i] += x0 * work[i + 1];
    out[k] = work[k];
  }
  return out;
}

Poly Poly::deflate(cplx r) const {
  if (is_zero()) return Poly();
  int n = degree();
  if (n == 0) return Poly();
  std::vector<cplx> q(n);
  cplx carry = c_[n];
  for (int k = n - 1; k >= 0; --k) {
    q[k] = carry;
    carry = c_[k] + r * carry;
  }
  return Poly(std::move(q));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<cplx> c(std::max(a.c_.size(), b.c_.size()), 0.0);
  for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (cplx(-1.0) * b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<cplx> c(a.c_.size() + b.c_.size() - 1, 0.0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator*(cplx s, const Poly& a) {
  std::vector<cplx> c = a.c_;
  for (cplx& v : c) v *= s;
  return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("Poly::divrem: zero divisor");
  std::vector<cplx> rem = a.c_;
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {Poly(), a};
  std::vector<cplx> q(da - db + 1, 0.0);
  for (int k = da - db; k >= 0; --k) {
    cplx f = rem[k + db] / b.c_[db];
    q[k] = f;
    for (int j = 0; j <= db; ++j) rem[k + j] -= f * b.c_[j];
  }
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

}  // namespace fracgreen
