#include "fracgreen/scenario.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include "fracgreen/fracnum.hpp"
#include "fracgreen/geom.hpp"
#include "fracgreen/powsym.hpp"
#include "fracgreen/sampling.hpp"

namespace fracgreen {

namespace {

using nlohmann::json;

std::chrono::steady_clock::time_point now() {
  return std::chrono::steady_clock::now();
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(now() - t0).count();
}

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (item.key() == a) known = true;
    if (!known)
      throw ConfigError("unknown key '" + item.key() + "' in " + where);
  }
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback) {
  if (!obj.contains(key)) return fallback;
  return obj.at(key).get<T>();
}

std::vector<cplx> identity_matrix(int n) {
  std::vector<cplx> a(n * n, 0.0);
  for (int j = 0; j < n; ++j) a[j * n + j] = 1.0;
  return a;
}

// explicit two-path jump evaluation for reporting
std::pair<cplx, cplx> jump_both_paths(const RationalFn& r) {
  cplx division = kImag * r.expansion_at_infinity(1)[0];
  PartialFractions pf = partial_fractions(r);
  cplx residues = 0.0;
  for (const auto& t : pf.terms)
    if (t.order == 1) residues += t.coeff;
  return {division, kImag * residues};
}

// ---- jump_table -------------------------------------------------------------

RunReport run_jump_table(const Scenario& sc) {
  require_keys(sc.params, {"xi_brackets", "a_nn", "tolerance"},
               "jump_table scenario '" + sc.name + "'");
  std::vector<double> brackets =
      get_or<std::vector<double>>(sc.params, "xi_brackets",
                                  {1.0, std::sqrt(2.0), 5.0});
  std::vector<double> anns =
      get_or<std::vector<double>>(sc.params, "a_nn", {1.0, 2.0, 4.0});
  double tol = get_or<double>(sc.params, "tolerance", 1e-12);

  RunReport rep;
  rep.scenario = sc.name;
  auto t0 = now();
  for (double s : brackets) {
    for (double ann : anns) {
      Poly br2({s * s, 0.0, 1.0});
      Poly l0({s * s, 0.0, ann});  // xi'^2 + a_nn t^2 at |xi'| = s
      struct Entry {
        const char* name;
        RationalFn fn;
        cplx expected;
      };
      const Entry entries[4] = {
          {"inv-bracket-sq", RationalFn::make(Poly::constant(1.0), br2),
           cplx(0.0)},
          {"xin-inv-bracket-sq", RationalFn::make(Poly::variable(), br2),
           kImag},
          {"chi-minus-inv", RationalFn::pole_term(kImag, -kImag * s),
           cplx(-1.0)},
          {"xin-inv-l0", RationalFn::make(Poly::variable(), l0), kImag / ann},
      };
      std::string tag = "s=" + format_g17(s) + ",ann=" + format_g17(ann) + "/";
      for (const Entry& e : entries) {
        auto [division, residues] = jump_both_paths(e.fn);
        rep.checks.push_back(make_check(sc.name, tag + e.name + "|delta|",
                                        std::abs(division - e.expected), 0.0,
                                        tol));
        rep.checks.push_back(make_check(sc.name,
                                        tag + e.name + "|path-agreement|",
                                        std::abs(division - residues), 0.0,
                                        tol));
      }
    }
  }
  rep.runtime_ms = ms_since(t0);
  return rep;
}

// ---- bsym_check -------------------------------------------------------------

RunReport run_bsym_check(const Scenario& sc, Rng& rng) {
  require_keys(sc.params,
               {"mode", "cases", "points", "a", "a_values", "xi_norm_range",
                "tolerance"},
               "bsym_check scenario '" + sc.name + "'");
  std::string mode = get_or<std::string>(sc.params, "mode", "random_equivalence");
  RunReport rep;
  rep.scenario = sc.name;
  auto t0 = now();

  if (mode == "random_equivalence") {
    int cases = get_or<int>(sc.params, "cases", 50);
    std::vector<double> a_values = get_or<std::vector<double>>(
        sc.params, "a_values", {0.3, 0.5, 0.75, 1.25});
    std::vector<double> range =
        get_or<std::vector<double>>(sc.params, "xi_norm_range", {1.0, 10.0});
    double tol = get_or<double>(sc.params, "tolerance", 1e-9);
    for (int it = 0; it < cases; ++it) {
      int n = 2 + (it % 3 == 0 ? 1 : 0);
      OperatorJet jet = sample_elliptic_jet(rng, n, 0.3, 0.7, 1.2);
      BoundaryJet bj = make_boundary_jet(
          std::move(jet), sample_xi_prime(rng, n - 1, range[0], range[1]));
      double a = a_values[it % a_values.size()];
      cplx closed = boundary_symbol_closed(bj.jet, a).eval(bj.xi_prime);
      cplx pipeline = std::pow(bj.jet.a(n - 1, n - 1), a) *
                      as_jump(q_expansion(bj, a));
      rep.checks.push_back(make_check(
          sc.name, "case-" + std::to_string(it) + "|delta|",
          std::abs(pipeline - closed), 0.0, tol * (1.0 + std::abs(closed))));
    }
  } else if (mode == "laplacian_zero") {
    int points = get_or<int>(sc.params, "points", 20);
    double a = get_or<double>(sc.params, "a", 0.7);
    double tol = get_or<double>(sc.params, "tolerance", 1e-12);
    for (int it = 0; it < points; ++it) {
      int n = 2 + (it % 2);
      OperatorJet lap = make_constant_jet(n, identity_matrix(n), {}, 0.0, 0.9);
      BoundaryJet bj =
          make_boundary_jet(std::move(lap), sample_xi_prime(rng, n - 1, 1.0, 8.0));
      cplx b = boundary_symbol_pipeline(bj, a);
      rep.checks.push_back(make_check(
          sc.name, "point-" + std::to_string(it) + "|b|", std::abs(b), 0.0, tol));
    }
  } else if (mode == "localized_laplacian") {
    double a = get_or<double>(sc.params, "a", 0.6);
    double tol = get_or<double>(sc.params, "tolerance", 1e-10);
    for (double g : {0.7, -0.4, 1.3}) {
      std::vector<cplx> A = identity_matrix(3);
      A[0] = 1.4;  // tangential principal block is unconstrained
      A[4] = 0.9;
      BoundaryJet bj = make_boundary_jet(
          make_constant_jet(3, A, {0.0, 0.0, -g}, 0.0, 0.7),
          sample_xi_prime(rng, 2, 1.0, 4.0));
      cplx b = boundary_symbol_pipeline(bj, a);
      rep.checks.push_back(make_check(sc.name,
                                      "g=" + format_g17(g) + "|b-ag|",
                                      std::abs(b - cplx(a * g)), 0.0, tol));
    }
  } else if (mode == "perturbed_localized") {
    double a = get_or<double>(sc.params, "a", 0.6);
    double tol = get_or<double>(sc.params, "tolerance", 1e-10);
    for (double g : {0.9, -0.6}) {
      for (double c_nu : {0.4, -1.1}) {
        // tangential drift and zero-order term do not touch the symbol
        BoundaryJet bj = make_boundary_jet(
            make_constant_jet(3, identity_matrix(3),
                              {0.8, -0.3, -(g - c_nu)}, cplx(0.2, 0.1), 0.9),
            sample_xi_prime(rng, 2, 1.0, 4.0));
        cplx b = boundary_symbol_pipeline(bj, a);
        rep.checks.push_back(make_check(
            sc.name,
            "g=" + format_g17(g) + ",cnu=" + format_g17(c_nu) + "|delta|",
            std::abs(b - cplx(a * (g - c_nu))), 0.0, tol));
      }
    }
  } else if (mode == "locality_classifier") {
    int cases = get_or<int>(sc.params, "cases", 40);
    int correct = 0;
    for (int it = 0; it < cases; ++it) {
      bool tangential = (it % 2 == 0);
      OperatorJet jet = sample_elliptic_jet(rng, 3, 0.35, 0.0, 1.0);
      std::vector<std::vector<cplx>> dA(3, std::vector<cplx>(9, 0.0));
      if (tangential)
        dA[it % 2][8] = cplx(rng.uniform(0.2, 1.0), rng.uniform(-0.5, 0.5));
      else
        dA[2][8] = cplx(rng.uniform(0.2, 1.0), 0.0);
      jet.dA = dA;
      Locality got = classify_locality(boundary_symbol_closed(jet, 0.75));
      if (got == (tangential ? Locality::nonlocal : Locality::local)) ++correct;
    }
    rep.checks.push_back(make_check(sc.name, "classified-correctly",
                                    static_cast<double>(correct),
                                    static_cast<double>(cases), 0.0));
  } else {
    throw ConfigError("bsym_check: unknown mode '" + mode + "'");
  }
  rep.runtime_ms = ms_since(t0);
  return rep;
}

// ---- power_contour ----------------------------------------------------------

RunReport run_power_contour(const Scenario& sc, Rng& rng) {
  require_keys(sc.params, {"cases", "nodes", "tolerance"},
               "power_contour scenario '" + sc.name + "'");
  int cases = get_or<int>(sc.params, "cases", 20);
  int nodes = get_or<int>(sc.params, "nodes", 64);
  double tol = get_or<double>(sc.params, "tolerance", 1e-8);
  if (nodes > 128) throw ConfigError("power_contour: nodes must be <= 128");

  RunReport rep;
  rep.scenario = sc.name;
  auto t0 = now();
  for (int it = 0; it < cases; ++it) {
    int n = 2 + (it % 2);
    OperatorJet jet = sample_elliptic_jet(rng, n, 0.35, 0.6, 1.0);
    std::vector<double> xi = sample_xi(rng, n);
    double a = rng.uniform(0.05, 1.95);
    PowerSymbol p = power_symbol(jet, xi, a);
    cplx oracle = power_symbol_contour(jet, xi, a, nodes);
    rep.checks.push_back(make_check(sc.name,
                                    "case-" + std::to_string(it) + "|delta|",
                                    std::abs(oracle - (p.p0 + p.p1)), 0.0, tol));
  }
  rep.runtime_ms = ms_since(t0);
  return rep;
}

// ---- geometry ---------------------------------------------------------------

RunReport run_geometry(const Scenario& sc, Rng& rng) {
  require_keys(sc.params, {"mode", "points", "cases", "tolerance", "patch"},
               "geometry scenario '" + sc.name + "'");
  std::string mode = get_or<std::string>(sc.params, "mode", "tube_jacobian_identity");
  RunReport rep;
  rep.scenario = sc.name;
  auto t0 = now();

  if (mode == "tube_jacobian_identity") {
    int points = get_or<int>(sc.params, "points", 200);
    double tol = get_or<double>(sc.params, "tolerance", 1e-6);
    double worst_fd = 0.0, worst_forms = 0.0;
    for (int it = 0; it < points; ++it) {
      geom::Jacobians j;
      if (it % 2 == 0) {
        geom::SurfacePatch e = geom::ellipse_patch(
            rng.uniform(0.6, 2.5), rng.uniform(0.6, 2.5), -kPi, kPi);
        geom::Vec y{rng.uniform(-kPi, kPi), 0.0, 0.0};
        j = geom::jacobians(e, y);
      } else {
        geom::SurfacePatch e = geom::ellipsoid_patch(
            rng.uniform(0.7, 2.2), rng.uniform(0.7, 2.2), rng.uniform(0.7, 2.2),
            {0.4, kPi - 0.4}, {0.0, kPi});
        geom::Vec y{rng.uniform(0.05, kPi - 0.05),
                    rng.uniform(0.45, kPi - 0.45), 0.0};
        j = geom::jacobians(e, y);
      }
      worst_fd = std::max(worst_fd,
                          std::abs(j.j1 - j.j1_fd) / (1.0 + std::abs(j.j1)));
      worst_forms = std::max(worst_forms, std::abs(j.j0 - j.j0_alt) / j.j0);
    }
    rep.checks.push_back(
        make_check(sc.name, "tube-derivative-identity|worst|", worst_fd, 0.0, tol));
    rep.checks.push_back(
        make_check(sc.name, "area-factor-forms|worst|", worst_forms, 0.0, 1e-10));
  } else if (mode == "ag_cancellation") {
    int cases = get_or<int>(sc.params, "cases", 100);
    double tol = get_or<double>(sc.params, "tolerance", 1e-8);
    double worst = 0.0;
    for (int it = 0; it < cases; ++it) {
      double a = rng.uniform(0.2, 1.5);
      double j0 = rng.uniform(0.5, 2.0);
      double g = rng.uniform(-1.5, 1.5);
      double c_nu = rng.uniform(-1.5, 1.5);
      cplx u0 = rng.uniform_complex(2.0), u1 = rng.uniform_complex(2.0);
      cplx v0 = rng.uniform_complex(2.0), v1 = rng.uniform_complex(2.0);
      auto [w0, w1] = geom::trace_transform(j0, j0 * g, v0, v1, a);
      cplx assembled = u1 * std::conj(w0) - u0 * std::conj(w1) +
                       a * (g - c_nu) * u0 * std::conj(w0);
      cplx flat = u1 * std::conj(j0 * v0) - u0 * std::conj(j0 * v1) -
                  a * c_nu * u0 * std::conj(j0 * v0);
      worst = std::max(worst,
                       std::abs(assembled - flat) / (1.0 + std::abs(flat)));
    }
    rep.checks.push_back(
        make_check(sc.name, "curvature-terms-cancel|worst|", worst, 0.0, tol));
  } else if (mode == "surface_checks") {
    double tol = get_or<double>(sc.params, "tolerance", 1e-10);
    geom::SurfacePatch right = geom::circle_patch(1.0, -kPi / 2, kPi / 2);
    geom::SurfacePatch left = geom::circle_patch(1.0, kPi / 2, 3 * kPi / 2);
    auto one = [](const geom::Vec&) { return 1.0; };
    auto x1sq = [](const geom::Vec& x) { return x[0] * x[0]; };
    double circumference = geom::surface_integral(right, one, 24).value +
                           geom::surface_integral(left, one, 24).value;
    double moment = geom::surface_integral(right, x1sq, 32).value +
                    geom::surface_integral(left, x1sq, 32).value;
    rep.checks.push_back(make_check(sc.name, "circle-circumference",
                                    circumference, 2.0 * kPi, tol));
    rep.checks.push_back(make_check(sc.name, "circle-x1sq-moment", moment,
                                    kPi, tol));
    rep.checks.push_back(make_check(
        sc.name, "circle-mean-curvature",
        geom::mean_curvature_g(right, {0.3, 0.0, 0.0}), -1.0, 1e-10));
    geom::SurfacePatch sph = geom::sphere_patch(2.0, {0.4, kPi - 0.4}, {0.0, kPi});
    rep.checks.push_back(make_check(
        sc.name, "sphere-mean-curvature",
        geom::mean_curvature_g(sph, {1.0, 0.9, 0.0}), -1.0, 1e-10));
    // tube split residual for a harmonic radial field
    geom::AmbientField logr{
        [](const geom::Vec& x) {
          return 0.5 * std::log(x[0] * x[0] + x[1] * x[1]);
        },
        [](const geom::Vec&) { return 0.0; }};
    geom::SurfacePatch circ = geom::circle_patch(1.0, -kPi / 2, kPi / 2);
    double worst = 0.0;
    for (double t : {0.0, 0.02, -0.03})
      worst = std::max(worst, std::abs(geom::localized_laplacian_residual(
                                  circ, logr, {0.5, 0.0, 0.0}, t)));
    rep.checks.push_back(
        make_check(sc.name, "tube-split-residual|worst|", worst, 0.0, 1e-6));
  } else if (mode == "patch_checks") {
    // a named patch from the config: unit normal, tangent orthogonality,
    // orientation, area-factor forms, and the tube-derivative identity
    std::string spec = get_or<std::string>(sc.params, "patch", "circle(1)");
    int points = get_or<int>(sc.params, "points", 40);
    geom::SurfacePatch p = geom::named_patch(spec);
    double worst_unit = 0.0, worst_orth = 0.0, worst_forms = 0.0,
           worst_fd = 0.0, min_j0 = 1e300;
    for (int it = 0; it < points; ++it) {
      geom::Vec y{rng.uniform(p.box_lo[0], p.box_hi[0]),
                  p.ambient_dim == 3 ? rng.uniform(p.box_lo[1], p.box_hi[1])
                                     : 0.0,
                  0.0};
      geom::Vec nu = p.normal(y);
      double norm = 0.0;
      for (int r = 0; r < p.ambient_dim; ++r) norm += nu[r] * nu[r];
      worst_unit = std::max(worst_unit, std::abs(std::sqrt(norm) - 1.0));
      geom::Vec tang[2];
      p.dchi(y, tang);
      for (int c = 0; c + 1 < p.ambient_dim; ++c) {
        double dot = 0.0;
        for (int r = 0; r < p.ambient_dim; ++r) dot += nu[r] * tang[c][r];
        worst_orth = std::max(worst_orth, std::abs(dot));
      }
      geom::Jacobians j = geom::jacobians(p, y);
      min_j0 = std::min(min_j0, j.j0);
      worst_forms = std::max(worst_forms, std::abs(j.j0 - j.j0_alt) / j.j0);
      worst_fd = std::max(worst_fd,
                          std::abs(j.j1 - j.j1_fd) / (1.0 + std::abs(j.j1)));
    }
    rep.checks.push_back(
        make_check(sc.name, spec + "/unit-normal|worst|", worst_unit, 0.0, 1e-12));
    rep.checks.push_back(make_check(sc.name, spec + "/orthogonality|worst|",
                                    worst_orth, 0.0, 1e-10));
    rep.checks.push_back(make_check(sc.name, spec + "/orientation|min-j0|",
                                    min_j0 > 0.0 ? 1.0 : 0.0, 1.0, 0.0));
    rep.checks.push_back(make_check(sc.name, spec + "/area-factor-forms|worst|",
                                    worst_forms, 0.0, 1e-10));
    rep.checks.push_back(make_check(sc.name, spec + "/tube-derivative|worst|",
                                    worst_fd, 0.0, 1e-6));
  } else {
    throw ConfigError("geometry: unknown mode '" + mode + "'");
  }
  rep.runtime_ms = ms_since(t0);
  return rep;
}

// ---- Green identities ---------------------------------------------------------

EdgeFunction1D parse_edge_function(const json& spec, double a,
                                   const std::string& where) {
  require_keys(spec, {"mu", "w"}, where);
  if (!spec.contains("mu")) throw ConfigError(where + ": missing 'mu'");
  double mu = 0.0;
  if (spec.at("mu").is_string()) {
    std::string m = spec.at("mu").get<std::string>();
    if (m == "a-1")
      mu = a - 1.0;
    else if (m == "a")
      mu = a;
    else
      throw ConfigError(where + ": mu must be \"a-1\", \"a\", or a number");
  } else {
    mu = spec.at("mu").get<double>();
  }
  std::vector<double> w = get_or<std::vector<double>>(spec, "w", {1.0});
  return EdgeFunction1D(mu, std::move(w));
}

RunReport run_greens_fraclap(const Scenario& sc, const RunOptions& opts) {
  require_keys(sc.params, {"a", "u", "v", "tolerance", "closed_form_reference"},
               "greens_fraclap scenario '" + sc.name + "'");
  double a = get_or<double>(sc.params, "a", 0.75);
  double tol = get_or<double>(sc.params, "tolerance", 1e-4);
  bool closed_ref = get_or<bool>(sc.params, "closed_form_reference", false);
  EdgeFunction1D u = sc.params.contains("u")
                         ? parse_edge_function(sc.params.at("u"), a, sc.name)
                         : EdgeFunction1D(a - 1.0, {1.0});
  EdgeFunction1D v = sc.params.contains("v")
                         ? parse_edge_function(sc.params.at("v"), a, sc.name)
                         : EdgeFunction1D(a, {1.0});

  GreensOptions gopts;
  gopts.jobs = opts.jobs;
  GreensReport g = greens_residual_fraclap(u, v, a, gopts);

  RunReport rep;
  rep.scenario = sc.name;
  if (closed_ref) {
    double ref = -std::pow(4.0, a) * std::tgamma(a) * std::tgamma(a + 1.0);
    rep.checks.push_back(make_check(sc.name, "lhs|vs-closed-form|", g.lhs, ref,
                                    tol * std::abs(ref), g.lhs_error,
                                    g.runtime_ms));
    rep.checks.push_back(make_check(sc.name, "rhs|vs-closed-form|", g.rhs, ref,
                                    tol * std::abs(ref), 0.0, 0.0));
  }
  // lhs against rhs directly (both sides visible in the emitted row), plus
  // the residual record
  double scale = std::max({std::abs(g.lhs), std::abs(g.rhs), 1.0});
  rep.checks.push_back(make_check(sc.name, "lhs|vs-rhs|", g.lhs, g.rhs,
                                  tol * scale, g.lhs_error, g.runtime_ms));
  rep.checks.push_back(make_check(sc.name, "identity|residual|", g.residual,
                                  0.0, tol * scale, g.lhs_error, 0.0));
  rep.runtime_ms = g.runtime_ms;
  return rep;
}

RunReport run_greens_drift(const Scenario& sc, const RunOptions& opts) {
  require_keys(sc.params,
               {"a", "c", "c0", "u", "v", "tolerance", "check_misbalance"},
               "greens_drift scenario '" + sc.name + "'");
  double a = get_or<double>(sc.params, "a", 0.75);
  double c = get_or<double>(sc.params, "c", 1.0);
  double c0 = get_or<double>(sc.params, "c0", 1.0);
  double tol = get_or<double>(sc.params, "tolerance", 1e-3);
  bool misbalance = get_or<bool>(sc.params, "check_misbalance", false);
  EdgeFunction1D u = sc.params.contains("u")
                         ? parse_edge_function(sc.params.at("u"), a, sc.name)
                         : EdgeFunction1D(a - 1.0, {1.0});
  EdgeFunction1D v = sc.params.contains("v")
                         ? parse_edge_function(sc.params.at("v"), a, sc.name)
                         : EdgeFunction1D(a - 1.0, {0.0, 1.0});

  GreensOptions gopts;
  gopts.jobs = opts.jobs;
  GreensReport g = greens_residual_drift(u, v, a, c, c0, gopts);

  double scale = std::max({std::abs(g.lhs), std::abs(g.rhs), 1.0});
  RunReport rep;
  rep.scenario = sc.name;
  rep.checks.push_back(make_check(sc.name, "lhs|vs-rhs|", g.lhs, g.rhs,
                                  tol * scale, g.lhs_error, g.runtime_ms));
  rep.checks.push_back(make_check(sc.name, "identity|residual|", g.residual,
                                  0.0, tol * scale, g.lhs_error, 0.0));
  if (misbalance) {
    // omitting the boundary drift correction must mis-balance by exactly the
    // trace-assembled correction
    rep.checks.push_back(make_check(
        sc.name, "drift-term-misbalance", g.lhs - g.rhs_without_drift_term,
        g.rhs - g.rhs_without_drift_term, tol * scale, g.lhs_error, 0.0));
  }
  rep.runtime_ms = g.runtime_ms;
  return rep;
}

}  // namespace

ScenarioKind parse_kind(const std::string& s) {
  if (s == "bsym_check") return ScenarioKind::bsym_check;
  if (s == "jump_table") return ScenarioKind::jump_table;
  if (s == "power_contour") return ScenarioKind::power_contour;
  if (s == "geometry") return ScenarioKind::geometry;
  if (s == "greens_fraclap") return ScenarioKind::greens_fraclap;
  if (s == "greens_drift") return ScenarioKind::greens_drift;
  throw ConfigError("unknown scenario kind '" + s + "'");
}

std::string kind_name(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::bsym_check: return "bsym_check";
    case ScenarioKind::jump_table: return "jump_table";
    case ScenarioKind::power_contour: return "power_contour";
    case ScenarioKind::geometry: return "geometry";
    case ScenarioKind::greens_fraclap: return "greens_fraclap";
    case ScenarioKind::greens_drift: return "greens_drift";
  }
  return "?";
}

std::vector<Scenario> parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("scenarios"))
    throw ConfigError("config must be an object with a 'scenarios' array");
  require_keys(doc, {"scenarios"}, "config root");
  if (!doc.at("scenarios").is_array())
    throw ConfigError("'scenarios' must be an array");

  std::vector<Scenario> out;
  int index = 0;
  for (const json& entry : doc.at("scenarios")) {
    std::string where = "scenarios[" + std::to_string(index) + "]";
    if (!entry.is_object()) throw ConfigError(where + " must be an object");
    if (!entry.contains("kind")) throw ConfigError(where + ": missing 'kind'");
    Scenario sc;
    sc.kind = parse_kind(entry.at("kind").get<std::string>());
    sc.name = get_or<std::string>(entry, "name",
                                  kind_name(sc.kind) + "-" + std::to_string(index));
    sc.seed = get_or<std::uint64_t>(entry, "seed", 1);
    sc.params = entry;
    sc.params.erase("kind");
    sc.params.erase("name");
    sc.params.erase("seed");
    out.push_back(std::move(sc));
    ++index;
  }
  return out;
}

RunReport run_scenario(const Scenario& sc, const RunOptions& opts) {
  std::uint64_t seed = opts.seed_override ? *opts.seed_override : sc.seed;
  Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  try {
    switch (sc.kind) {
      case ScenarioKind::jump_table: return run_jump_table(sc);
      case ScenarioKind::bsym_check: return run_bsym_check(sc, rng);
      case ScenarioKind::power_contour: return run_power_contour(sc, rng);
      case ScenarioKind::geometry: return run_geometry(sc, rng);
      case ScenarioKind::greens_fraclap: return run_greens_fraclap(sc, opts);
      case ScenarioKind::greens_drift: return run_greens_drift(sc, opts);
    }
  } catch (const ConfigError&) {
    throw;  // configuration problems abort the run
  } catch (const std::exception& e) {
    // numerical rejections are recorded as scenario failures; the run goes on
    RunReport rep;
    rep.scenario = sc.name;
    CheckRecord rec;
    rec.scenario = sc.name;
    rec.check = std::string("error: ") + e.what();
    rec.computed = std::nan("");
    rec.pass = false;
    rep.checks.push_back(std::move(rec));
    return rep;
  }
  throw ConfigError("unreachable scenario kind");
}

std::vector<RunReport> run_all(const std::vector<Scenario>& scenarios,
                               const RunOptions& opts, std::ostream* progress) {
  std::vector<RunReport> reports;
  reports.reserve(scenarios.size());
  for (const Scenario& sc : scenarios) {
    RunReport rep = run_scenario(sc, opts);
    if (progress) {
      int failed = 0;
      for (const CheckRecord& c : rep.checks)
        if (!c.pass) ++failed;
      (*progress) << "[" << (rep.passed() ? "pass" : "FAIL") << "] "
                  << rep.scenario << " (" << rep.checks.size() << " checks";
      if (failed) (*progress) << ", " << failed << " failed";
      (*progress) << ", " << format_g17(rep.runtime_ms) << " ms)\n";
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace fracgreen
