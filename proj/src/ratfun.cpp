#include "fracgreen/ratfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace fracgreen {

namespace {

// Root-cancellation tolerance, relative to the local evaluation scale.
constexpr double kCancelTol = 1e-9;
// Poles nearer the real axis than this (relative) are rejected by jump().
constexpr double kRealAxisTol = 1e-7;
// Distinct pole clusters nearer than this (relative) refuse decomposition.
constexpr double kPoleSeparationTol = 2e-4;

double local_scale(const Poly& p, cplx x) {
  double am = std::abs(x);
  double s = 0.0;
  for (int k = p.degree(); k >= 0; --k) s = s * am + std::abs(p.coeff(k));
  return std::max(s, 1e-300);
}

// Truncated power-series division num/den, den[0] != 0.
std::vector<cplx> series_div(const std::vector<cplx>& num,
                             const std::vector<cplx>& den, int count) {
  std::vector<cplx> s(count, 0.0);
  for (int t = 0; t < count; ++t) {
    cplx acc = (t < static_cast<int>(num.size())) ? num[t] : cplx(0.0);
    for (int i = 0; i < t; ++i) {
      int j = t - i;
      if (j < static_cast<int>(den.size())) acc -= s[i] * den[j];
    }
    s[t] = acc / den[0];
  }
  return s;
}

}  // namespace

RationalFn RationalFn::constant(cplx v) {
  RationalFn r;
  r.num_ = Poly::constant(v);
  return r;
}

RationalFn RationalFn::pole_term(cplx coeff, cplx pole, int order) {
  std::vector<cplx> reps(order, pole);
  RationalFn r;
  r.num_ = Poly::constant(coeff);
  r.den_ = Poly::from_roots(reps);
  r.poles_ = {{pole, order}};
  if (coeff == cplx(0.0)) return zero();
  return r;
}

RationalFn RationalFn::make(const Poly& num_in, const Poly& den_in) {
  if (den_in.is_zero())
    throw std::invalid_argument("RationalFn: zero denominator");
  if (num_in.is_zero()) return zero();

  cplx den_lead = den_in.lead();
  Poly num = (cplx(1.0) / den_lead) * num_in;
  Poly den = den_in.monic();

  std::vector<RootCluster> clusters = find_root_clusters(den);

  // Cancel common roots within tolerance, reducing pole orders.
  for (RootCluster& c : clusters) {
    while (c.order > 0 && !num.is_zero() &&
           std::abs(num.eval(c.location)) <=
               kCancelTol * local_scale(num, c.location)) {
      num = num.deflate(c.location);
      c.order -= 1;
      if (num.is_zero()) break;
    }
  }
  std::erase_if(clusters, [](const RootCluster& c) { return c.order <= 0; });

  std::vector<cplx> kept;
  for (const RootCluster& c : clusters)
    for (int k = 0; k < c.order; ++k) kept.push_back(c.location);

  RationalFn r;
  r.num_ = num;
  r.den_ = Poly::from_roots(kept);
  r.poles_ = std::move(clusters);
  return r;
}

int RationalFn::order_at_infinity() const {
  if (is_zero()) return kOrderNegInf;
  return num_.degree() - den_.degree();
}

std::vector<cplx> RationalFn::expansion_at_infinity(int count) const {
  std::vector<cplx> out(count, 0.0);
  if (is_zero()) return out;
  int gap = den_.degree() - num_.degree();
  if (gap < 0)
    throw std::invalid_argument("expansion_at_infinity: order > 0");
  // reversed-coefficient series: r(1/w) = w^gap * num_rev(w)/den_rev(w)
  std::vector<cplx> nr(num_.degree() + 1), dr(den_.degree() + 1);
  for (int k = 0; k <= num_.degree(); ++k) nr[k] = num_.coeff(num_.degree() - k);
  for (int k = 0; k <= den_.degree(); ++k) dr[k] = den_.coeff(den_.degree() - k);
  std::vector<cplx> s = series_div(nr, dr, count + 1);
  for (int k = 1; k <= count; ++k) {
    int t = k - gap;
    if (t >= 0 && t <= count) out[k - 1] = s[t];
  }
  return out;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return RationalFn::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return RationalFn::make(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn::make(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator*(cplx s, const RationalFn& a) {
  if (s == cplx(0.0)) return RationalFn::zero();
  return RationalFn::make(s * a.num(), a.den());
}

PartialFractions partial_fractions(const RationalFn& r) {
  PartialFractions out;
  if (r.is_zero()) return out;

  // Refuse decompositions with badly separated pole clusters.
  const auto& poles = r.poles();
  for (size_t i = 0; i < poles.size(); ++i)
    for (size_t j = i + 1; j < poles.size(); ++j) {
      double scale =
          1.0 + std::max(std::abs(poles[i].location), std::abs(poles[j].location));
      if (std::abs(poles[i].location - poles[j].location) <
          kPoleSeparationTol * scale)
        throw std::runtime_error(
            "partial_fractions: pole clusters too close to separate");
    }

  auto [poly_part, rem] = Poly::divrem(r.num(), r.den());
  out.poly_part = poly_part;
  if (rem.is_zero()) return out;

  for (const RootCluster& pc : poles) {
    // g = rem / (den with this pole factor removed), Taylor-expanded at the
    // pole; the series coefficients are the partial-fraction coefficients.
    Poly den_rest = r.den();
    for (int k = 0; k < pc.order; ++k) den_rest = den_rest.deflate(pc.location);
    std::vector<cplx> nt = rem.taylor_at(pc.location, pc.order - 1);
    std::vector<cplx> dt = den_rest.taylor_at(pc.location, pc.order - 1);
    std::vector<cplx> g = series_div(nt, dt, pc.order);
    for (int j = pc.order; j >= 1; --j) {
      cplx coeff = g[pc.order - j];
      if (coeff == cplx(0.0)) continue;
      out.terms.push_back(
          {pc.location, j, coeff, std::imag(pc.location) > 0.0});
    }
  }

  // Evaluation check at five real points (post contract). The error scale
  // carries the term magnitudes: when coefficients of nearby pole groups
  // cancel, that cancellation is intrinsic to the representation.
  const double pts[5] = {0.1735, -1.0902, 2.7183, -3.3301, 0.5077};
  for (double x : pts) {
    cplx direct = r.eval(x);
    cplx rebuilt = out.poly_part.eval(x);
    double term_scale = 0.0;
    for (const auto& t : out.terms) {
      cplx d = cplx(x) - t.pole;
      cplx dk = d;
      for (int k = 1; k < t.order; ++k) dk *= d;
      rebuilt += t.coeff / dk;
      term_scale += std::abs(t.coeff / dk);
    }
    if (std::abs(direct - rebuilt) >
        1e-10 * (1.0 + std::abs(direct) + term_scale))
      throw std::runtime_error("partial_fractions: reconstruction check failed");
  }
  return out;
}

cplx jump(const RationalFn& r) {
  if (r.is_zero()) return 0.0;
  if (r.order_at_infinity() > 0)
    throw std::invalid_argument("jump: order at infinity must be <= 0");
  for (const RootCluster& p : r.poles()) {
    if (std::abs(std::imag(p.location)) <
        kRealAxisTol * (1.0 + std::abs(p.location)))
      throw std::invalid_argument("jump: pole too close to the real axis");
  }

  // Path (i): i * coefficient of x^{-1} in the expansion at infinity.
  cplx c1 = r.expansion_at_infinity(1)[0];
  cplx path_division = kImag * c1;

  // Path (ii): i * sum of order-1 partial-fraction coefficients. The order-0
  // constant part (a delta contribution under inverse transform) drops out of
  // both paths by construction.
  PartialFractions pf = partial_fractions(r);
  cplx residue_sum = 0.0;
  double residue_scale = 0.0;
  for (const auto& t : pf.terms)
    if (t.order == 1) {
      residue_sum += t.coeff;
      residue_scale += std::abs(t.coeff);
    }
  cplx path_residues = kImag * residue_sum;

  if (std::abs(path_division - path_residues) >
      1e-12 * (1.0 + std::abs(path_division) + residue_scale))
    throw std::runtime_error("jump: computation paths disagree");
  return path_division;
}

}  // namespace fracgreen
