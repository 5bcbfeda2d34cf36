#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "premetric/calculus.hpp"
#include "premetric/graded_tensor.hpp"

namespace premetric {

/// A tensor with values in an external vector space V: a list of
/// (basis label, component) pairs of equal shape. Labels are 1-based.
template <class C>
class VValuedTensor {
 public:
  using Component = std::pair<int, GradedTensor<C>>;

  VValuedTensor() = default;
  VValuedTensor(std::initializer_list<Component> comps) {
    for (const auto& c : comps) add(c.first, c.second);
  }

  void add(int label, GradedTensor<C> t) {
    if (label < 1) throw ContractViolation("V-basis labels are 1-based");
    for (const auto& [l, existing] : components_) {
      if (l == label) throw ContractViolation("duplicate V-basis label " + std::to_string(label));
    }
    if (!components_.empty() && !components_.front().second.same_shape(t)) {
      throw ContractViolation("V-valued components must share degree, variance and dimension");
    }
    components_.emplace_back(label, std::move(t));
  }

  const std::vector<Component>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  int degree() const { return components_.at(0).second.degree(); }
  int dim() const { return components_.at(0).second.dim(); }
  Variance variance() const { return components_.at(0).second.variance(); }

  template <class F>
  VValuedTensor map_components(F&& f) const {
    VValuedTensor out;
    for (const auto& [l, t] : components_) out.add(l, f(t));
    return out;
  }

 private:
  std::vector<Component> components_;
};

/// Unordered label pair {i, j}, stored with i <= j.
using SymKey = std::pair<int, int>;

inline SymKey sym_key(int i, int j) { return i <= j ? SymKey{i, j} : SymKey{j, i}; }

/// Result of a phi-extended interior product: components keyed by label
/// pairs. Missing keys are zero.
template <class C>
class SymValuedTensor {
 public:
  SymValuedTensor() = default;
  SymValuedTensor(int n, int degree, Variance v) : n_(n), degree_(degree), variance_(v) {}

  void accumulate(const SymKey& key, const GradedTensor<C>& t, int sign = 1) {
    auto it = comps_.find(key);
    if (it == comps_.end()) it = comps_.emplace(key, GradedTensor<C>(n_, degree_, variance_)).first;
    if (sign > 0) {
      it->second += t;
    } else {
      it->second -= t;
    }
    if (it->second.is_zero()) comps_.erase(it);
  }

  GradedTensor<C> at(int i, int j) const {
    auto it = comps_.find(sym_key(i, j));
    return it == comps_.end() ? GradedTensor<C>(n_, degree_, variance_) : it->second;
  }

  const std::map<SymKey, GradedTensor<C>>& components() const { return comps_; }
  int dim() const { return n_; }
  int degree() const { return degree_; }
  bool is_zero() const { return comps_.empty(); }

  SymValuedTensor& operator-=(const SymValuedTensor& o) {
    for (const auto& [k, t] : o.comps_) accumulate(k, t, -1);
    return *this;
  }
  SymValuedTensor& operator+=(const SymValuedTensor& o) {
    for (const auto& [k, t] : o.comps_) accumulate(k, t, 1);
    return *this;
  }

 private:
  int n_ = 0;
  int degree_ = 0;
  Variance variance_ = Variance::covariant;
  std::map<SymKey, GradedTensor<C>> comps_;
};

/// A bilinear map phi on basis labels: phi(e_i, k_j) = sign * e_key, or
/// nothing when it vanishes.
struct BilinearLabelMap {
  std::string name;
  std::function<std::optional<std::pair<int, SymKey>>(int, int)> apply;

  /// Symmetrized tensor product: e_i v e_j = e_j v e_i.
  static BilinearLabelMap vee() {
    return {"vee", [](int i, int j) { return std::optional(std::pair{1, sym_key(i, j)}); }};
  }
};

/// i^phi_T Phi = sum_{i,j} i_{t_i} alpha_j (x) phi(e_i, k_j).
template <class C>
SymValuedTensor<C> phi_interior(const VValuedTensor<C>& t, const VValuedTensor<C>& phi,
                                const BilinearLabelMap& map) {
  if (t.empty() || phi.empty()) throw ContractViolation("phi_interior: empty V-valued argument");
  if (t.degree() > phi.degree()) {
    throw ContractViolation("phi_interior: multivector degree exceeds form degree");
  }
  SymValuedTensor<C> out(phi.dim(), phi.degree() - t.degree(), phi.variance());
  for (const auto& [li, ti] : t.components()) {
    for (const auto& [lj, aj] : phi.components()) {
      const auto image = map.apply(li, lj);
      if (!image) continue;
      out.accumulate(image->second, contract(ti, aj), image->first);
    }
  }
  return out;
}

template <class C>
SymValuedTensor<C> vee_interior(const VValuedTensor<C>& t, const VValuedTensor<C>& phi) {
  return phi_interior(t, phi, BilinearLabelMap::vee());
}

VValuedTensor<Expr> exterior_derivative(const VValuedTensor<Expr>& phi);
SymValuedTensor<Expr> exterior_derivative(const SymValuedTensor<Expr>& phi);
VValuedTensor<Expr> time_derivative(const VValuedTensor<Expr>& phi, const Chart& chart);

/// L^phi_T(Phi) = d(i^phi_T Phi) - (-1)^{deg T} i^phi_T(d Phi).
SymValuedTensor<Expr> phi_lie(const VValuedTensor<Expr>& t, const VValuedTensor<Expr>& phi,
                              const BilinearLabelMap& map);
SymValuedTensor<Expr> vee_lie(const VValuedTensor<Expr>& t, const VValuedTensor<Expr>& phi);

/// The many-subsystem flow on a 4n-dimensional space: with
/// F^i = i_{Gbar_j} omega, G^j = -i_{Fbar_i} omega (j = n+i) this returns
/// i^vee_{Omega_bar} d Omega for Omega = F^i(x)e_i + G^j(x)e_j and
/// Omega_bar = Fbar_i(x)e_i + Gbar_j(x)e_j.
SymValuedTensor<Expr> appendix_flow(const std::vector<Field>& fbars, const std::vector<Field>& gbars,
                                    const VolumeContext& vol);

/// Warnings for sample points where either list of 2n-vectors is linearly
/// dependent (numerical rank of the coefficient matrix below n).
std::vector<std::string> appendix_independence_warnings(const std::vector<Field>& fbars,
                                                         const std::vector<Field>& gbars,
                                                         std::span<const std::vector<double>> points);

}  // namespace premetric
