#include "premetric/electrodyn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace premetric {

namespace {

std::vector<Expr> as_vector(const std::array<Expr, 3>& a) { return {a.begin(), a.end()}; }

Field scalar4(const Expr& e) { return Field::scalar(4, e); }

/// Coefficient of an antisymmetric 2-tensor in slots (a, b), 1-based axes.
Expr comp2(const Field& t, int a, int b) {
  if (a == b) return Expr(0.0);
  if (a < b) return t.coefficient(MultiIndex(t.dim(), {a, b}));
  return -t.coefficient(MultiIndex(t.dim(), {b, a}));
}

Expr comp1(const Field& t, int a) { return t.coefficient(MultiIndex(t.dim(), {a})); }

BalanceComponents from_sym(const SymValuedTensor<Expr>& s) {
  return {s.at(1, 1), s.at(2, 2), s.at(1, 2)};
}

void add_balance(ResidualSet& set, const std::string& check, const std::string& prefix,
                 const BalanceComponents& b) {
  set.add(check, prefix + "_11", b.e11);
  set.add(check, prefix + "_22", b.e22);
  set.add(check, prefix + "_12", b.e12);
}

void add_agreement(ResidualSet& set, const std::string& check, const std::string& prefix,
                   const BalanceComponents& a, const BalanceComponents& b) {
  set.add(check, prefix + "_11", a.e11 - b.e11);
  set.add(check, prefix + "_22", a.e22 - b.e22);
  set.add(check, prefix + "_12", a.e12 - b.e12);
}

std::string format_point(std::span<const double> p) {
  std::string s = "(";
  char buf[32];
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%.4g", i ? ", " : "", p[i]);
    s += buf;
  }
  return s + ")";
}

struct SpatialPieces {
  Field e, b, alpha, beta, omega3;
};

SpatialPieces pieces(const EMConfig& cfg) {
  return {cfg.e_field(), cfg.b_field(), cfg.alpha_form(), cfg.beta_form(), volume3()};
}

}  // namespace

Field EMConfig::e_field() const { return vector_field(as_vector(E)); }
Field EMConfig::b_field() const { return vector_field(as_vector(B)); }
Field EMConfig::alpha_form() const { return one_form(as_vector(alpha)); }
Field EMConfig::beta_form() const { return one_form(as_vector(beta)); }

std::vector<Expr> EMConfig::components() const {
  std::vector<Expr> out;
  for (const auto* a : {&E, &B, &alpha, &beta}) out.insert(out.end(), a->begin(), a->end());
  return out;
}

void EMConfig::validate() const {
  if (chart.dim() != 4 || !chart.has("xi")) {
    throw ContractViolation("EMConfig needs the 4-dimensional chart with a xi coordinate");
  }
  for (const Expr& e : components()) {
    if (max_var_index(e) >= chart.dim()) {
      throw ContractViolation("EMConfig component uses a coordinate outside the chart");
    }
  }
}

EMConfig resolve(const EMConfig& cfg, Regime regime) {
  cfg.validate();
  EMConfig out = cfg;
  const bool identify = cfg.identify_alpha_with_E.value_or(regime == Regime::spacetime);
  if (identify) {
    out.alpha = cfg.E;
    out.beta = cfg.B;
  }
  out.identify_alpha_with_E = identify;
  return out;
}

Field volume3() { return VolumeContext(3).omega<Expr>(); }
Field volume4() { return VolumeContext(4).omega<Expr>(); }

SpacetimePair build_spacetime(const EMConfig& cfg) {
  const EMConfig c = resolve(cfg, Regime::spacetime);
  const SpatialPieces s = pieces(c);
  const Field dxi = Field::basis_element(MultiIndex(4, {4}), Variance::covariant);
  SpacetimePair p;
  p.F = embed(interior_vector(s.b, s.omega3), 4) + wedge(embed(s.alpha, 4), dxi);
  p.G = embed(interior_vector(s.e, s.omega3), 4) - wedge(embed(s.beta, 4), dxi);
  p.Gbar = multivector_dual_to(p.F);
  p.Fbar = -multivector_dual_to(p.G);
  return p;
}

StressTensor::StressTensor(int dim) : dim_(dim), comps_(static_cast<std::size_t>(dim * dim)) {}

Expr StressTensor::trace() const {
  Expr t(0.0);
  for (int i = 0; i < dim_; ++i) t = t + at(i, i);
  return t;
}

Field StressTensor::contract_vector(const Field& x) const {
  if (x.dim() != dim_ || x.degree() != 1 || x.variance() != Variance::contravariant) {
    throw ContractViolation("stress contraction expects a vector of matching dimension");
  }
  std::vector<Expr> v(dim_, Expr(0.0));
  for (int s = 0; s < dim_; ++s) {
    const Expr xs = comp1(x, s + 1);
    if (xs.is_constant(0.0)) continue;
    for (int m = 0; m < dim_; ++m) v[m] = v[m] + xs * at(s, m);
  }
  return vector_field(v);
}

Expr StressTensor::apply(const Field& x, const Field& theta) const {
  if (theta.dim() != dim_ || theta.degree() != 1 || theta.variance() != Variance::covariant) {
    throw ContractViolation("stress evaluation expects a 1-form of matching dimension");
  }
  return pairing(theta, contract_vector(x));
}

// ---- pre-relativistic ------------------------------------------------------

ResidualSet prerel_linear_residuals(const EMConfig& cfg) {
  const EMConfig c = resolve(cfg, Regime::prerelativistic);
  const SpatialPieces s = pieces(c);
  const std::string check = "linear_prerel";
  ResidualSet set;
  set.add(check, "lie_E_omega3", lie_derivative(s.e, s.omega3));
  set.add(check, "lie_B_omega3", lie_derivative(s.b, s.omega3));
  set.add(check, "faraday_E",
          time_derivative(interior_vector(s.e, s.omega3), c.chart) - exterior_derivative(s.beta));
  set.add(check, "faraday_B",
          time_derivative(interior_vector(s.b, s.omega3), c.chart) + exterior_derivative(s.alpha));
  set.add(check, "eigen_E", Field::scalar(3, pairing(s.beta, s.e)));
  set.add(check, "eigen_B", Field::scalar(3, pairing(s.alpha, s.b)));
  set.add(check, "flow_balance",
          Field::scalar(3, pairing(s.alpha, s.e) - pairing(s.beta, s.b)));
  return set;
}

ResidualSet cross_helicity_residual(const EMConfig& cfg) {
  const EMConfig c = resolve(cfg, Regime::prerelativistic);
  const SpatialPieces s = pieces(c);
  const Expr energy = Expr(0.5) * (pairing(s.alpha, s.e) + pairing(s.beta, s.b));
  Field r = wedge(s.beta, exterior_derivative(s.alpha)) - wedge(s.alpha, exterior_derivative(s.beta));
  r += differentiate(energy, c.chart.index_of("xi")) * s.omega3;
  ResidualSet set;
  set.add("cross_helicity", "cross_helicity", r);
  return set;
}

Field helicity(const Field& eta) {
  if (eta.degree() != 1 || eta.variance() != Variance::covariant) {
    throw ContractViolation("helicity expects a 1-form");
  }
  return wedge(eta, exterior_derivative(eta));
}

Field integrability_form(const EMConfig& cfg) {
  const EMConfig c = resolve(cfg, Regime::prerelativistic);
  return interior_multivector(wedge(c.e_field(), c.b_field()), volume3());
}

ResidualSet integrability_residual(const EMConfig& cfg) {
  const EMConfig c = resolve(cfg, Regime::prerelativistic);
  const Field theta = integrability_form(c);
  ResidualSet set;
  set.add("integrability", "dtheta_wedge_theta", wedge(exterior_derivative(theta), theta));
  set.add("integrability", "iE_theta", interior_vector(c.e_field(), theta));
  set.add("integrability", "iB_theta", interior_vector(c.b_field(), theta));
  return set;
}

StressTensor stress_prerel(const EMConfig& cfg) {
  const EMConfig c = resolve(cfg, Regime::prerelativistic);
  const SpatialPieces s = pieces(c);
  const Expr half_sum = Expr(0.5) * (pairing(s.alpha, s.e) + pairing(s.beta, s.b));
  StressTensor t(3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Expr v = c.alpha[i] * c.E[j] + c.beta[i] * c.B[j];
      if (i == j) v = v - half_sum;
      t.at(i, j) = v;
    }
  }
  return t;
}

Expr flow_postulate_residual(const EMConfig& cfg) {
  const EMConfig c = resolve(cfg, Regime::prerelativistic);
  const SpatialPieces s = pieces(c);
  const Expr half_sum = Expr(0.5) * (pairing(s.alpha, s.e) + pairing(s.beta, s.b));
  return pairing(wedge(s.alpha, s.beta), wedge(s.e, s.b)) - pow(half_sum, 2);
}

EigenDirections eigen_directions(const EMConfig& cfg, std::span<const double> point, double tol) {
  const EMConfig c = resolve(cfg, Regime::prerelativistic);
  const StressTensor t = stress_prerel(c);
  auto values = [&](const Field& v) {
    std::array<double, 3> out{};
    const GradedTensor<double> n = evaluate(v, point);
    for (int i = 0; i < 3; ++i) out[i] = n.coefficient(MultiIndex(3, {i + 1}));
    return out;
  };
  auto minors = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return std::max({std::abs(a[0] * b[1] - a[1] * b[0]), std::abs(a[0] * b[2] - a[2] * b[0]),
                     std::abs(a[1] * b[2] - a[2] * b[1])});
  };
  auto norm = [](const std::array<double, 3>& a) {
    return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])});
  };
  // lambda from the component where the direction is largest.
  auto ratio = [](const std::array<double, 3>& v, const std::array<double, 3>& d) {
    int k = 0;
    for (int i = 1; i < 3; ++i) {
      if (std::abs(d[i]) > std::abs(d[k])) k = i;
    }
    return d[k] == 0.0 ? 0.0 : v[k] / d[k];
  };

  const auto e = values(c.e_field());
  const auto b = values(c.b_field());
  const auto te = values(t.contract_vector(c.e_field()));
  const auto tb = values(t.contract_vector(c.b_field()));

  EigenDirections out;
  out.independent = minors(e, b) > tol * std::max(1.0, norm(e) * norm(b));
  out.e_is_eigen = minors(te, e) <= tol * std::max(1.0, norm(te) * norm(e));
  out.b_is_eigen = minors(tb, b) <= tol * std::max(1.0, norm(tb) * norm(b));
  out.lambda1 = ratio(te, e);
  out.lambda2 = ratio(tb, b);
  return out;
}

std::vector<std::string> independence_warnings(const EMConfig& cfg,
                                               const std::vector<std::vector<double>>& points) {
  const EMConfig c = resolve(cfg, Regime::prerelativistic);
  const Field eb = wedge(c.e_field(), c.b_field());
  std::size_t bad = 0;
  const std::vector<double>* first = nullptr;
  for (const auto& p : points) {
    if (max_abs_at(eb, p) <= 1e-12) {
      if (bad++ == 0) first = &p;
    }
  }
  if (bad == 0) return {};
  return {"E and B are linearly dependent at " + std::to_string(bad) + " of " +
          std::to_string(points.size()) + " sample points (first at " + format_point(*first) +
          ")"};
}

// ---- spacetime linear ------------------------------------------------------

ResidualSet linear_spacetime_residuals(const SpacetimePair& pair) {
  const Field omega = volume4();
  const Field df = exterior_derivative(pair.F);
  const Field dg = exterior_derivative(pair.G);
  const std::string check = "linear_spacetime";
  ResidualSet set;
  set.add(check, "dF", df);
  set.add(check, "dG", dg);
  set.add(check, "lie_Gbar_omega_minus_dF", lie_derivative(pair.Gbar, omega) - df);
  set.add(check, "lie_Fbar_omega_plus_dG", lie_derivative(pair.Fbar, omega) + dg);
  return set;
}

StressTensor stress_spacetime(const SpacetimePair& pair) {
  StressTensor t(4);
  for (int s = 1; s <= 4; ++s) {
    for (int m = 1; m <= 4; ++m) {
      Expr sum(0.0);
      for (int n = 1; n <= 4; ++n) {
        sum = sum + comp2(pair.F, s, n) * comp2(pair.Fbar, m, n) +
              comp2(pair.G, s, n) * comp2(pair.Gbar, m, n);
      }
      t.at(s - 1, m - 1) = Expr(-0.5) * sum;
    }
  }
  return t;
}

Expr stress_bilinear(const SpacetimePair& pair, const Field& x, const Field& theta) {
  const Expr f = pairing(interior_vector(x, pair.F), interior_form(theta, pair.Fbar));
  const Expr g = pairing(interior_vector(x, pair.G), interior_form(theta, pair.Gbar));
  return Expr(-0.5) * (f + g);
}

ResidualSet conservation_residual(const SpacetimePair& pair, const Field& x) {
  const Field v = stress_spacetime(pair).contract_vector(x);
  ResidualSet set;
  set.add("conservation", "d_iV_omega", exterior_derivative(interior_vector(v, volume4())));
  return set;
}

ResidualSet invariant_relations(const EMConfig& cfg) {
  const EMConfig c = resolve(cfg, Regime::spacetime);
  const SpacetimePair p = build_spacetime(c);
  const SpatialPieces s = pieces(c);
  const Expr ff = pairing(p.F, p.Fbar);
  const Expr gg = pairing(p.G, p.Gbar);
  const std::string check = "invariant_relations";
  ResidualSet set;
  set.add(check, "F_Fbar", scalar4(ff - (pairing(s.beta, s.b) - pairing(s.alpha, s.e))));
  set.add(check, "F_Fbar_plus_G_Gbar", scalar4(ff + gg));
  set.add(check, "F_Gbar", scalar4(pairing(p.F, p.Gbar) - Expr(2.0) * pairing(s.alpha, s.b)));
  set.add(check, "G_Fbar", scalar4(pairing(p.G, p.Fbar) - Expr(2.0) * pairing(s.beta, s.e)));
  set.add(check, "F_equals_iGbar_omega", p.F - interior_multivector(p.Gbar, volume4()));
  set.add(check, "G_equals_minus_iFbar_omega", p.G + interior_multivector(p.Fbar, volume4()));
  return set;
}

// ---- nonlinear -------------------------------------------------------------

BalanceComponents static_balance_components(const EMConfig& cfg) {
  const EMConfig c = resolve(cfg, Regime::prerelativistic);
  const SpatialPieces s = pieces(c);
  const VolumeContext vol(3);
  const Field da = exterior_derivative(s.alpha);
  const Field db = exterior_derivative(s.beta);
  const Expr div_e = div(s.e, vol);
  const Expr div_b = div(s.b, vol);
  BalanceComponents out;
  out.e11 = interior_vector(s.e, da) + div_b * s.beta;
  out.e22 = interior_vector(s.b, db) + div_e * s.alpha;
  out.e12 = interior_vector(s.e, db) + interior_vector(s.b, da) - div_e * s.beta - div_b * s.alpha;
  return out;
}

namespace {

struct Subsystems {
  VValuedTensor<Expr> omega, omega_bar, sigma, sigma_bar;
};

Subsystems subsystems(const EMConfig& c) {
  const SpatialPieces s = pieces(c);
  const Field hbar = multivector_dual_to(s.alpha);
  const Field kbar = multivector_dual_to(s.beta);
  Subsystems out;
  out.omega = VValuedTensor<Expr>({{1, s.alpha}, {2, s.beta}});
  out.omega_bar = VValuedTensor<Expr>({{1, s.e}, {2, s.b}});
  out.sigma = VValuedTensor<Expr>(
      {{1, -interior_vector(s.b, s.omega3)}, {2, interior_vector(s.e, s.omega3)}});
  out.sigma_bar = VValuedTensor<Expr>({{1, -kbar}, {2, hbar}});
  return out;
}

SymValuedTensor<Expr> static_flow(const Subsystems& s) {
  SymValuedTensor<Expr> flow = vee_interior(s.omega_bar, exterior_derivative(s.omega));
  flow += vee_interior(s.sigma_bar, exterior_derivative(s.sigma));
  return flow;
}

}  // namespace

BalanceComponents static_balance_vvalued(const EMConfig& cfg) {
  return from_sym(static_flow(subsystems(resolve(cfg, Regime::prerelativistic))));
}

ResidualSet static_balance_residual(const EMConfig& cfg) {
  const BalanceComponents a = static_balance_components(cfg);
  ResidualSet set;
  add_balance(set, "static_balance", "static", a);
  add_agreement(set, "static_balance", "static_paths", a, static_balance_vvalued(cfg));
  return set;
}

BalanceComponents time_balance_components(const EMConfig& cfg) {
  const EMConfig c = resolve(cfg, Regime::prerelativistic);
  const Field omega3 = volume3();
  const Field e_dot = time_derivative(c.e_field(), c.chart);
  const Field b_dot = time_derivative(c.b_field(), c.chart);
  auto flux = [&](const Field& a, const Field& b) {
    return interior_multivector(wedge(a, b), omega3);
  };
  BalanceComponents out = static_balance_components(c);
  out.e11 += flux(b_dot, c.e_field());
  out.e22 -= flux(e_dot, c.b_field());
  out.e12 = out.e12 - flux(e_dot, c.e_field()) + flux(b_dot, c.b_field());
  return out;
}

BalanceComponents time_balance_vvalued(const EMConfig& cfg) {
  const EMConfig c = resolve(cfg, Regime::prerelativistic);
  const Subsystems s = subsystems(c);
  SymValuedTensor<Expr> flow = static_flow(s);
  flow -= vee_interior(s.omega_bar, time_derivative(s.sigma, c.chart));
  return from_sym(flow);
}

ResidualSet time_balance_residual(const EMConfig& cfg) {
  const BalanceComponents a = time_balance_components(cfg);
  ResidualSet set;
  add_balance(set, "time_balance", "time", a);
  add_agreement(set, "time_balance", "time_paths", a, time_balance_vvalued(cfg));
  return set;
}

VValuedTensor<Expr> spacetime_omega(const SpacetimePair& pair) {
  return VValuedTensor<Expr>({{1, pair.F}, {2, pair.G}});
}

VValuedTensor<Expr> spacetime_omega_bar(const SpacetimePair& pair) {
  return VValuedTensor<Expr>({{1, pair.Fbar}, {2, pair.Gbar}});
}

BalanceComponents spacetime_balance_components(const SpacetimePair& pair) {
  return from_sym(vee_interior(spacetime_omega_bar(pair), exterior_derivative(spacetime_omega(pair))));
}

BalanceComponents divergence_form_components(const SpacetimePair& pair) {
  const Field div_fbar = delta(pair.Fbar);
  const Field div_gbar = delta(pair.Gbar);
  BalanceComponents out;
  out.e11 = interior_vector(div_gbar, pair.G);
  out.e22 = interior_vector(div_fbar, pair.F);
  out.e12 = interior_vector(div_fbar, pair.G) + interior_vector(div_gbar, pair.F);
  return out;
}

ResidualSet spacetime_balance_residual(const SpacetimePair& pair) {
  const BalanceComponents flow = spacetime_balance_components(pair);
  BalanceComponents divform = divergence_form_components(pair);
  divform.e12 = -divform.e12;
  const std::string check = "nonlinear_spacetime";
  ResidualSet set;
  set.add(check, "iFbar_dF", flow.e11);
  set.add(check, "iGbar_dG", flow.e22);
  set.add(check, "iFbar_dG_plus_iGbar_dF", flow.e12);
  add_agreement(set, check, "divergence_form_agreement", flow, divform);
  return set;
}

ResidualSet null_condition_check(const SpacetimePair& pair) {
  const std::string check = "null_conditions";
  ResidualSet set;
  set.add(check, "F_wedge_F", wedge(pair.F, pair.F));
  set.add(check, "G_wedge_G", wedge(pair.G, pair.G));
  set.add(check, "F_wedge_G", wedge(pair.F, pair.G));
  set.add(check, "alpha_B", scalar4(Expr(0.5) * pairing(pair.F, pair.Gbar)));
  set.add(check, "beta_E", scalar4(Expr(0.5) * pairing(pair.G, pair.Fbar)));
  set.add(check, "alpha_E_minus_beta_B", scalar4(-pairing(pair.F, pair.Fbar)));
  return set;
}

// ---- autoparallel ------------------------------------------------------------

ResidualSet autoparallel_residuals(const Field& u, AutoparallelMode mode) {
  if (u.degree() != 1 || u.variance() != Variance::contravariant) {
    throw ContractViolation("autoparallel check expects a vector field");
  }
  const int n = u.dim();
  ResidualSet set;
  if (mode == AutoparallelMode::timelike) {
    std::vector<Expr> r(n, Expr(0.0));
    for (int m = 1; m <= n; ++m) {
      for (int k = 1; k <= n; ++k) {
        r[m - 1] = r[m - 1] + comp1(u, k) * differentiate(comp1(u, m), k - 1);
      }
    }
    set.add("autoparallel", "u_grad_u", vector_field(r));
    return set;
  }
  std::vector<Expr> comps;
  for (int k = 1; k <= n; ++k) comps.push_back(comp1(u, k));
  const Field u_flat = one_form(comps);
  Field r = interior_vector(u, exterior_derivative(u_flat));
  r += Expr(0.5) * exterior_derivative(Field::scalar(n, pairing(u_flat, u)));
  set.add("autoparallel", "iu_du_plus_half_d_norm", r);
  return set;
}

double config_scale(const EMConfig& cfg, const std::vector<std::vector<double>>& points) {
  return derivative_scale(cfg.components(), points);
}

}  // namespace premetric
