#include "fracgreen/bsym.hpp"

#include <stdexcept>

namespace fracgreen {

namespace {

// l0 restricted to fixed xi' as a quadratic in the normal frequency:
// a_nn t^2 + beta t + gamma.
struct NormalQuadratic {
  cplx ann;
  cplx beta;   // sum_{j<n} (a_jn + a_nj) xi_j
  cplx gamma;  // sum_{j,k<n} a_jk xi_j xi_k
  Poly poly() const { return Poly({gamma, beta, ann}); }
};

NormalQuadratic normal_quadratic(const BoundaryJet& bj) {
  const OperatorJet& jet = bj.jet;
  int n = jet.n;
  NormalQuadratic q;
  q.ann = jet.a(n - 1, n - 1);
  q.beta = 0.0;
  q.gamma = 0.0;
  for (int j = 0; j + 1 < n; ++j)
    q.beta += (jet.a(j, n - 1) + jet.a(n - 1, j)) * bj.xi_prime[j];
  for (int j = 0; j + 1 < n; ++j)
    for (int k = 0; k + 1 < n; ++k)
      q.gamma += jet.a(j, k) * bj.xi_prime[j] * bj.xi_prime[k];
  return q;
}

// dx_m(l0) restricted to fixed xi' as a quadratic in the normal frequency.
NormalQuadratic normal_quadratic_dx(const BoundaryJet& bj, int m) {
  const OperatorJet& jet = bj.jet;
  int n = jet.n;
  NormalQuadratic q;
  q.ann = jet.da(m, n - 1, n - 1);
  q.beta = 0.0;
  q.gamma = 0.0;
  for (int j = 0; j + 1 < n; ++j)
    q.beta += (jet.da(m, j, n - 1) + jet.da(m, n - 1, j)) * bj.xi_prime[j];
  for (int j = 0; j + 1 < n; ++j)
    for (int k = 0; k + 1 < n; ++k)
      q.gamma += jet.da(m, j, k) * bj.xi_prime[j] * bj.xi_prime[k];
  return q;
}

// dxi_j(l0) restricted to fixed xi' as a linear function of the normal
// frequency: slope t + offset.
struct NormalLinear {
  cplx slope;
  cplx offset;
  Poly poly() const { return Poly({offset, slope}); }
};

NormalLinear normal_linear_dxi(const BoundaryJet& bj, int j) {
  const OperatorJet& jet = bj.jet;
  int n = jet.n;
  NormalLinear l;
  l.slope = jet.a(j, n - 1) + jet.a(n - 1, j);
  l.offset = 0.0;
  for (int k = 0; k + 1 < n; ++k)
    l.offset += (jet.a(j, k) + jet.a(k, j)) * bj.xi_prime[k];
  return l;
}

// Verifies that a reduction dropped only O(x^{-2}) content. The order of the
// difference is computed from the cross-multiplied numerator directly; it is
// invariant under common-factor cancellation, so no refactorization is needed.
void check_reduction(const RationalFn& raw, const RationalFn& reduced,
                     const char* what) {
  Poly num = raw.num() * reduced.den() - reduced.num() * raw.den();
  if (num.is_zero()) return;
  int order = num.degree() - raw.den().degree() - reduced.den().degree();
  if (order > -2)
    throw std::runtime_error(std::string("q_expansion: reduction of ") + what +
                             " dropped content above O(x^{-2})");
}

}  // namespace

double BoundaryJet::xi_prime_norm() const {
  double s = 0.0;
  for (double v : xi_prime) s += v * v;
  return std::sqrt(s);
}

double BoundaryJet::bracket() const {
  double s = 1.0;
  for (double v : xi_prime) s += v * v;
  return std::sqrt(s);
}

BoundaryJet make_boundary_jet(OperatorJet jet, std::vector<double> xi_prime) {
  if (static_cast<int>(xi_prime.size()) != jet.n - 1)
    throw std::invalid_argument("BoundaryJet: xi' must have n-1 entries");
  BoundaryJet bj{std::move(jet), std::move(xi_prime)};
  if (bj.xi_prime_norm() < 1.0 - 1e-12)
    throw std::invalid_argument("BoundaryJet: |xi'| >= 1 required");
  return bj;
}

SigmaRoots sigma_roots(const BoundaryJet& bj) {
  NormalQuadratic q = normal_quadratic(bj);
  cplx disc = std::sqrt(q.beta * q.beta - 4.0 * q.ann * q.gamma);
  cplx r1 = (-q.beta + disc) / (2.0 * q.ann);
  cplx r2 = (-q.beta - disc) / (2.0 * q.ann);
  if (std::imag(r1) < std::imag(r2)) std::swap(r1, r2);
  if (!(std::imag(r1) > 0.0) || !(std::imag(r2) < 0.0))
    throw std::runtime_error("sigma_roots: roots do not split by half-plane");

  SigmaRoots out;
  out.sigma_plus = -kImag * r1;  // r1 = +i sigma_plus
  out.sigma_minus = kImag * r2;  // r2 = -i sigma_minus

  double tol = 1e-10;
  if (std::real(out.sigma_plus) <= tol || std::real(out.sigma_minus) <= tol)
    throw std::runtime_error(
        "sigma_roots: strong ellipticity violated (Re sigma <= 0)");

  // residual check |l0(xi', i sigma_plus)| <= 1e-10 * scale
  for (cplx root : {r1, r2}) {
    double scale = std::abs(q.ann) * std::norm(root) +
                   std::abs(q.beta) * std::abs(root) + std::abs(q.gamma) + 1.0;
    cplx res = q.ann * root * root + q.beta * root + q.gamma;
    if (std::abs(res) > 1e-10 * scale)
      throw std::runtime_error("sigma_roots: residual check failed");
  }
  return out;
}

cplx BoundarySymbol::eval(const std::vector<double>& xi_prime) const {
  if (xi_prime.size() != c_tan.size())
    throw std::invalid_argument("BoundarySymbol::eval: dimension mismatch");
  double b2 = 1.0;
  for (double v : xi_prime) b2 += v * v;
  double inv_bracket = 1.0 / std::sqrt(b2);
  cplx acc = c0;
  for (size_t j = 0; j < c_tan.size(); ++j) {
    acc += c_tan[j] * kImag * xi_prime[j];
    acc += c_nonlocal[j] * kImag * xi_prime[j] * inv_bracket;
  }
  return acc;
}

double BoundarySymbol::coefficient_scale() const {
  double s = std::abs(c0);
  for (const cplx& v : c_tan) s = std::max(s, std::abs(v));
  for (const cplx& v : c_nonlocal) s = std::max(s, std::abs(v));
  return s;
}

AsymptoticSum q_expansion(const BoundaryJet& bj, double a) {
  const OperatorJet& jet = bj.jet;
  int n = jet.n;
  if (bj.xi_prime_norm() < 1.0 - 1e-12)
    throw std::invalid_argument("q_expansion: |xi'| >= 1 required");
  sigma_roots(bj);  // validates ellipticity at this xi'

  NormalQuadratic l0q = normal_quadratic(bj);
  Poly l0 = l0q.poly();
  double br = bj.bracket();
  Poly bracket2({br * br, 0.0, 1.0});  // <xi>^2 = <xi'>^2 + t^2
  cplx ann_inv = 1.0 / l0q.ann;

  // -- step (i): (l0 / <xi>^2)^a = a_nn^a (1 + c/<xi>^2)^a, binomial-expanded.
  // c = a_nn^{-1} (beta t + gamma) - <xi'>^2, a first-degree polynomial in t.
  Poly c_poly({ann_inv * l0q.gamma - br * br, ann_inv * l0q.beta});
  RationalFn t_full = RationalFn::make(c_poly, bracket2);
  AsymptoticSum binom =
      as_binomial_power(AsymptoticSum::single(t_full, 2), a);
  // reduce the linear term to its order(-1) part, drop order-checked
  std::vector<RationalFn> binom_reduced{RationalFn::one()};
  for (const RationalFn& term : binom.terms()) {
    if (term.order_at_infinity() == 0) continue;  // the leading 1
    RationalFn reduced =
        RationalFn::make(Poly({0.0, a * ann_inv * l0q.beta}), bracket2);
    check_reduction(term, reduced, "binomial factor");
    if (!reduced.is_zero()) binom_reduced.push_back(reduced);
  }
  AsymptoticSum factor1(binom_reduced, 2);

  // -- step (ii): 1 + i a b.xi l0^{-1} - C(a,2) sum_j dxi_j(l0) dx_j(l0) i l0^{-2}
  std::vector<RationalFn> factor2_terms{RationalFn::one()};

  cplx b_tan = 0.0;
  for (int j = 0; j + 1 < n; ++j) b_tan += jet.b[j] * bj.xi_prime[j];
  cplx b_n = jet.b[n - 1];
  RationalFn drift_raw = RationalFn::make(
      kImag * a * Poly({b_tan, b_n}), l0);
  RationalFn drift_reduced =
      RationalFn::make(kImag * a * b_n * Poly::variable(), l0);
  check_reduction(drift_raw, drift_reduced, "drift term");
  if (!drift_reduced.is_zero()) factor2_terms.push_back(drift_reduced);

  double c_a2 = binomial(a, 2);
  if (c_a2 != 0.0) {
    Poly pairing;  // sum_j dxi_j(l0) dx_j(l0) as a polynomial in t
    for (int j = 0; j < n; ++j) {
      NormalLinear lj = normal_linear_dxi(bj, j);
      NormalQuadratic dj = normal_quadratic_dx(bj, j);
      pairing = pairing + lj.poly() * dj.poly();
    }
    RationalFn deriv_raw =
        RationalFn::make(-c_a2 * kImag * pairing, l0 * l0);
    // reduction target: -C(a,2) i a_nn^{-1} K t l0^{-1} with K the t^3
    // coefficient of the pairing
    cplx K = pairing.coeff(3);
    RationalFn deriv_reduced = RationalFn::make(
        -c_a2 * kImag * ann_inv * K * Poly::variable(), l0);
    check_reduction(deriv_raw, deriv_reduced, "derivative pairing term");
    if (!deriv_reduced.is_zero()) factor2_terms.push_back(deriv_reduced);
  }

  // -- step (iii): first-order composition correction
  //   i a^2 chi_-^{-1} l0^{-1} (sum_{j<n} xi_j <xi'>^{-1} dx_j(l0) - i dx_n(l0))
  Poly lhs_poly;
  for (int j = 0; j + 1 < n; ++j) {
    NormalQuadratic dj = normal_quadratic_dx(bj, j);
    lhs_poly = lhs_poly + (bj.xi_prime[j] / br) * dj.poly();
  }
  NormalQuadratic dn = normal_quadratic_dx(bj, n - 1);
  lhs_poly = lhs_poly - kImag * dn.poly();
  if (!lhs_poly.is_zero()) {
    // chi_-^{-1} = i / (t + i <xi'>)
    Poly chi_minus_den({kImag * br, 1.0});
    RationalFn leibniz_raw = RationalFn::make(
        kImag * a * a * kImag * lhs_poly, chi_minus_den * l0);
    cplx reduced_scalar = kImag * a * a * ann_inv * lhs_poly.coeff(2);
    RationalFn leibniz_reduced =
        RationalFn::make(Poly::constant(reduced_scalar * kImag),
                         chi_minus_den);
    check_reduction(leibniz_raw, leibniz_reduced, "composition correction");
    if (!leibniz_reduced.is_zero()) {
      AsymptoticSum with_leibniz = as_add(
          AsymptoticSum(factor2_terms, 2),
          AsymptoticSum::single(leibniz_reduced, 2));
      return as_mul(factor1, with_leibniz);
    }
  }
  return as_mul(factor1, AsymptoticSum(factor2_terms, 2));
}

BoundarySymbol boundary_symbol_closed(const OperatorJet& jet, double a) {
  int n = jet.n;
  cplx ann = jet.a(n - 1, n - 1);
  cplx ann_pow = std::pow(ann, a - 1.0);
  double c_a2 = binomial(a, 2);

  BoundarySymbol b;
  b.c_tan.assign(n - 1, 0.0);
  b.c_nonlocal.assign(n - 1, 0.0);

  for (int j = 0; j + 1 < n; ++j) {
    cplx cross = jet.a(j, n - 1) + jet.a(n - 1, j);
    b.c_tan[j] = a * ann_pow * cross;
    b.c_nonlocal[j] = -a * a * ann_pow * jet.da(j, n - 1, n - 1);
  }

  cplx dn_ann = jet.da(n - 1, n - 1, n - 1);
  cplx cross_pairing = 2.0 * ann * dn_ann;
  for (int j = 0; j + 1 < n; ++j)
    cross_pairing += (jet.a(j, n - 1) + jet.a(n - 1, j)) *
                     jet.da(j, n - 1, n - 1);
  b.c0 = -a * ann_pow * jet.b[n - 1] + c_a2 * ann_pow / ann * cross_pairing -
         a * a * ann_pow * dn_ann;
  return b;
}

cplx boundary_symbol_pipeline(const BoundaryJet& bj, double a) {
  cplx ann = bj.jet.a(bj.jet.n - 1, bj.jet.n - 1);
  cplx value = std::pow(ann, a) * as_jump(q_expansion(bj, a));
  cplx closed = boundary_symbol_closed(bj.jet, a).eval(bj.xi_prime);
  if (std::abs(value - closed) > 1e-10 * (1.0 + std::abs(closed)))
    throw std::runtime_error(
        "boundary_symbol_pipeline: disagreement with the closed form");
  return value;
}

cplx s0(const OperatorJet& jet, double a) {
  return std::pow(jet.a(jet.n - 1, jet.n - 1), a);
}

Locality classify_locality(const BoundarySymbol& b) {
  double scale = 1.0 + b.coefficient_scale();
  for (const cplx& v : b.c_nonlocal)
    if (std::abs(v) > 1e-12 * scale) return Locality::nonlocal;
  return Locality::local;
}

}  // namespace fracgreen
