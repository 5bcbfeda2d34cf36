#include "premetric/calculus.hpp"

#include <algorithm>
#include <cmath>

namespace premetric {

Field exterior_derivative(const Field& phi) {
  if (phi.variance() != Variance::covariant) {
    throw ContractViolation("exterior_derivative expects a form");
  }
  const int n = phi.dim();
  Field out(n, phi.degree() + 1, Variance::covariant);
  for (const auto& [idx, f] : phi.terms()) {
    for (int k = 1; k <= n; ++k) {
      if (idx.contains(k)) continue;
      Expr df = differentiate(f, k - 1);
      if (CoeffTraits<Expr>::is_zero(df)) continue;
      // eps^k ^ eps^I: move eps^k past the axes of I smaller than k.
      const MultiIndex joined = MultiIndex::from_mask(n, idx.mask() | (1u << (k - 1)));
      out.add_term(joined, (idx.position(k) & 1) ? -df : df);
    }
  }
  return out;
}

Expr div(const Field& x, const VolumeContext& vol) {
  if (x.variance() != Variance::contravariant || x.degree() != 1) {
    throw ContractViolation("div expects a vector field");
  }
  if (x.dim() != vol.dim()) throw ContractViolation("div: dimension mismatch");
  return exterior_derivative(interior_vector(x, vol.omega())).coefficient(MultiIndex::full(vol.dim()));
}

Field lie_derivative(const Field& t, const Field& phi) {
  if (t.variance() != Variance::contravariant || phi.variance() != Variance::covariant) {
    throw ContractViolation("lie_derivative expects (multivector, form)");
  }
  if (t.degree() > phi.degree()) {
    throw ContractViolation("lie_derivative: multivector degree exceeds form degree");
  }
  Field out = exterior_derivative(interior_multivector(t, phi));
  Field second = interior_multivector(t, exterior_derivative(phi));
  if (second.degree() != out.degree()) throw ContractViolation("lie_derivative: degree mismatch");
  if (t.degree() & 1) {
    out += second;
  } else {
    out -= second;
  }
  return out;
}

Field partial(const Field& phi, int var) {
  return phi.map([var](const Expr& e) { return differentiate(e, var); });
}

Field time_derivative(const Field& phi, const Chart& chart) {
  const int xi = chart.index_of("xi");
  if (xi < 0) throw ContractViolation("time_derivative needs a chart with coordinate 'xi'");
  return partial(phi, xi);
}

GradedTensor<double> evaluate(const Field& t, std::span<const double> point) {
  return t.map([point](const Expr& e) { return eval(e, point); });
}

double max_abs_at(const Field& t, std::span<const double> point) {
  double m = 0.0;
  for (const auto& [idx, e] : t.terms()) m = std::max(m, std::abs(eval(e, point)));
  return m;
}

Field vector_field(const std::vector<Expr>& components) {
  const int n = static_cast<int>(components.size());
  Field out(n, 1, Variance::contravariant);
  for (int i = 0; i < n; ++i) out.add_term(MultiIndex(n, {i + 1}), components[i]);
  return out;
}

Field one_form(const std::vector<Expr>& components) {
  const int n = static_cast<int>(components.size());
  Field out(n, 1, Variance::covariant);
  for (int i = 0; i < n; ++i) out.add_term(MultiIndex(n, {i + 1}), components[i]);
  return out;
}

}  // namespace premetric
