#include "premetric/fd_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace premetric {

namespace {

using Num = GradedTensor<double>;

double max_abs(const Num& t) {
  double m = 0.0;
  for (const auto& [idx, c] : t.terms()) m = std::max(m, std::abs(c));
  return m;
}

Num fd_exterior_derivative(const Field& f, std::span<const double> point, double h) {
  const int n = f.dim();
  Num out(n, f.degree() + 1, Variance::covariant);
  std::vector<double> p(point.begin(), point.end());
  for (int k = 0; k < n; ++k) {
    const double x0 = p[k];
    p[k] = x0 + h;
    const Num plus = evaluate(f, p);
    p[k] = x0 - h;
    const Num minus = evaluate(f, p);
    p[k] = x0;
    const Num slope = (1.0 / (2.0 * h)) * (plus - minus);
    out += wedge(Num::basis_element(MultiIndex(n, {k + 1}), Variance::covariant), slope);
  }
  return out;
}

}  // namespace

OracleValues fd_balance_at(const EMConfig& cfg, std::span<const double> point, double h) {
  return fd_balance_at(build_spacetime(cfg), point, h);
}

OracleValues fd_balance_at(const SpacetimePair& pair, std::span<const double> point, double h) {
  const Num fbar = evaluate(pair.Fbar, point);
  const Num gbar = evaluate(pair.Gbar, point);
  const Num df = fd_exterior_derivative(pair.F, point, h);
  const Num dg = fd_exterior_derivative(pair.G, point, h);
  OracleValues v;
  v.dF = max_abs(df);
  v.dG = max_abs(dg);
  v.flow_ff = max_abs(contract(fbar, df));
  v.flow_gg = max_abs(contract(gbar, dg));
  v.flow_mixed = max_abs(contract(fbar, dg) + contract(gbar, df));
  return v;
}

OracleResult fd_balance_oracle(const std::string& family, const EMConfig& cfg,
                               const std::vector<std::vector<double>>& points, double tol,
                               double h) {
  OracleResult r;
  r.family = family;
  r.n_points = points.size();
  r.tolerance = tol;
  r.scale = config_scale(resolve(cfg, Regime::spacetime), points);
  const SpacetimePair pair = build_spacetime(cfg);
  for (const auto& p : points) {
    const OracleValues v = fd_balance_at(pair, p, h);
    r.max_flow = std::max({r.max_flow, v.flow_ff, v.flow_gg, v.flow_mixed});
  }
  r.pass = r.max_flow <= tol * std::max(1.0, r.scale);
  return r;
}

}  // namespace premetric
