#pragma once

#include "premetric/expr.hpp"
#include "premetric/graded_tensor.hpp"

namespace premetric {

/// The volume pair of an oriented n-dimensional space: omega is the
/// covariant volume form eps^1^...^eps^n, omega_bar the contravariant volume
/// e_1^...^e_n, with <omega, omega_bar> = 1.
class VolumeContext {
 public:
  explicit VolumeContext(int n) : n_(n) {
    if (n < 1 || n > MultiIndex::kMaxDim) throw ContractViolation("volume dimension out of range");
  }
  int dim() const { return n_; }

  template <class C = Expr>
  GradedTensor<C> omega() const {
    return GradedTensor<C>::basis_element(MultiIndex::full(n_), Variance::covariant);
  }
  template <class C = Expr>
  GradedTensor<C> omega_bar() const {
    return GradedTensor<C>::basis_element(MultiIndex::full(n_), Variance::contravariant);
  }

 private:
  int n_;
};

namespace detail {

template <class C>
GradedTensor<C> basis_dual(const GradedTensor<C>& t, Variance out_variance) {
  GradedTensor<C> out(t.dim(), t.dim() - t.degree(), out_variance);
  for (const auto& [idx, c] : t.terms()) {
    out.add_term(idx.complement(), (idx.sigma() & 1) ? C(-c) : c);
  }
  return out;
}

inline int involution_sign(int p, int n) { return ((p * (n - p)) & 1) ? -1 : 1; }

}  // namespace detail

/// D^p: p-vectors to (n-p)-forms,
/// D^p(e_{v1}^...^e_{vp}) = (-1)^sigma eps^{v_{p+1}}^...^eps^{v_n}.
template <class C>
GradedTensor<C> dual_of_multivector(const GradedTensor<C>& t) {
  if (t.variance() != Variance::contravariant) {
    throw ContractViolation("dual_of_multivector expects a multivector");
  }
  return detail::basis_dual(t, Variance::covariant);
}

/// D_p: p-forms to (n-p)-vectors, the mirror rule using omega_bar.
template <class C>
GradedTensor<C> dual_of_form(const GradedTensor<C>& psi) {
  if (psi.variance() != Variance::covariant) throw ContractViolation("dual_of_form expects a form");
  return detail::basis_dual(psi, Variance::contravariant);
}

/// The multivector T with i_T omega = psi, i.e. (D^p)^{-1} = (-1)^{p(n-p)} D_{n-p}.
template <class C>
GradedTensor<C> multivector_dual_to(const GradedTensor<C>& psi) {
  GradedTensor<C> t = dual_of_form(psi);
  if (detail::involution_sign(t.degree(), t.dim()) < 0) return -t;
  return t;
}

/// The form Phi with i_Phi omega_bar = T, i.e. (D_p)^{-1} = (-1)^{p(n-p)} D^{n-p}.
template <class C>
GradedTensor<C> form_dual_to(const GradedTensor<C>& t) {
  GradedTensor<C> phi = dual_of_multivector(t);
  if (detail::involution_sign(phi.degree(), phi.dim()) < 0) return -phi;
  return phi;
}

struct DualInverseResult {
  bool holds = false;
  int sign = 1;  // (-1)^{p(n-p)}
};

/// Checks D_{n-p} o D^p = (-1)^{p(n-p)} id and D^{n-p} o D_p = (-1)^{p(n-p)} id
/// on every basis element of degree p.
DualInverseResult dual_inverse_check(int p, int n);

/// Pre-metric divergence delta^p = (-1)^p D_{n-p+1} o d o D^p, taking p-vector
/// fields to (p-1)-vector fields.
Field delta(const Field& t);

}  // namespace premetric
