#include "premetric/vvalued.hpp"

#include <Eigen/Dense>

namespace premetric {

VValuedTensor<Expr> exterior_derivative(const VValuedTensor<Expr>& phi) {
  return phi.map_components([](const Field& f) { return exterior_derivative(f); });
}

SymValuedTensor<Expr> exterior_derivative(const SymValuedTensor<Expr>& phi) {
  SymValuedTensor<Expr> out(phi.dim(), phi.degree() + 1, Variance::covariant);
  for (const auto& [k, t] : phi.components()) out.accumulate(k, exterior_derivative(t));
  return out;
}

VValuedTensor<Expr> time_derivative(const VValuedTensor<Expr>& phi, const Chart& chart) {
  return phi.map_components([&chart](const Field& f) { return time_derivative(f, chart); });
}

SymValuedTensor<Expr> phi_lie(const VValuedTensor<Expr>& t, const VValuedTensor<Expr>& phi,
                              const BilinearLabelMap& map) {
  SymValuedTensor<Expr> out = exterior_derivative(phi_interior(t, phi, map));
  SymValuedTensor<Expr> second = phi_interior(t, exterior_derivative(phi), map);
  if (t.degree() & 1) {
    out += second;
  } else {
    out -= second;
  }
  return out;
}

SymValuedTensor<Expr> vee_lie(const VValuedTensor<Expr>& t, const VValuedTensor<Expr>& phi) {
  return phi_lie(t, phi, BilinearLabelMap::vee());
}

namespace {

void validate_appendix(const std::vector<Field>& fbars, const std::vector<Field>& gbars,
                       const VolumeContext& vol) {
  const int n = static_cast<int>(fbars.size());
  if (n == 0 || gbars.size() != fbars.size()) {
    throw ContractViolation("appendix_flow: need two non-empty lists of equal length");
  }
  if (vol.dim() != 4 * n) throw ContractViolation("appendix_flow: volume dimension must be 4n");
  for (const auto* list : {&fbars, &gbars}) {
    for (const Field& f : *list) {
      if (f.dim() != 4 * n || f.degree() != 2 * n || f.variance() != Variance::contravariant) {
        throw ContractViolation("appendix_flow: fields must be 2n-vectors on the 4n-space");
      }
    }
  }
}

}  // namespace

SymValuedTensor<Expr> appendix_flow(const std::vector<Field>& fbars, const std::vector<Field>& gbars,
                                    const VolumeContext& vol) {
  validate_appendix(fbars, gbars, vol);
  const int n = static_cast<int>(fbars.size());
  const Field omega = vol.omega<Expr>();
  VValuedTensor<Expr> big_omega;
  VValuedTensor<Expr> big_omega_bar;
  for (int i = 1; i <= n; ++i) {
    big_omega.add(i, interior_multivector(gbars[i - 1], omega));
  }
  for (int i = 1; i <= n; ++i) {
    big_omega.add(n + i, -interior_multivector(fbars[i - 1], omega));
  }
  for (int i = 1; i <= n; ++i) big_omega_bar.add(i, fbars[i - 1]);
  for (int i = 1; i <= n; ++i) big_omega_bar.add(n + i, gbars[i - 1]);
  return vee_interior(big_omega_bar, exterior_derivative(big_omega));
}

std::vector<std::string> appendix_independence_warnings(const std::vector<Field>& fbars,
                                                         const std::vector<Field>& gbars,
                                                         std::span<const std::vector<double>> points) {
  std::vector<std::string> warnings;
  const int n = static_cast<int>(fbars.size());
  if (n == 0) return warnings;
  const auto& idx = basis(fbars[0].dim(), fbars[0].degree());
  std::size_t dependent_f = 0;
  std::size_t dependent_g = 0;
  for (const auto& p : points) {
    for (int which = 0; which < 2; ++which) {
      const auto& list = which == 0 ? fbars : gbars;
      Eigen::MatrixXd m(static_cast<Eigen::Index>(idx.size()), n);
      for (int c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < idx.size(); ++r) {
          m(static_cast<Eigen::Index>(r), c) = eval(list[c].coefficient(idx[r]), p);
        }
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
      lu.setThreshold(1e-12);
      if (lu.rank() < n) ++(which == 0 ? dependent_f : dependent_g);
    }
  }
  if (dependent_f > 0) {
    warnings.push_back("Fbar list linearly dependent at " + std::to_string(dependent_f) + " of " +
                       std::to_string(points.size()) + " sample points");
  }
  if (dependent_g > 0) {
    warnings.push_back("Gbar list linearly dependent at " + std::to_string(dependent_g) + " of " +
                       std::to_string(points.size()) + " sample points");
  }
  return warnings;
}

}  // namespace premetric
