#pragma once

#include <map>
#include <string>
#include <utility>

#include "premetric/errors.hpp"
#include "premetric/multi_index.hpp"

namespace premetric {

/// Arithmetic hooks for tensor coefficients. The generic version covers
/// double and exact rationals; Expr specializes it.
template <class C>
struct CoeffTraits {
  static C zero() { return C(0); }
  static C one() { return C(1); }
  static bool is_zero(const C& c) { return c == C(0); }
};

enum class Variance { covariant, contravariant };

inline Variance opposite(Variance v) {
  return v == Variance::covariant ? Variance::contravariant : Variance::covariant;
}

inline const char* to_string(Variance v) {
  return v == Variance::covariant ? "covariant" : "contravariant";
}

/// Sparse homogeneous element of the exterior algebra over an n-dimensional
/// space: a p-form (covariant) or p-vector (contravariant) with coefficients
/// of type C keyed by ascending multi-indices. Absent keys are zero and zero
/// coefficients are never stored. A tensor of degree above n is the zero
/// element of a trivial space.
template <class C>
class GradedTensor {
 public:
  using Traits = CoeffTraits<C>;
  using Terms = std::map<MultiIndex, C>;

  GradedTensor() = default;
  GradedTensor(int n, int degree, Variance variance)
      : n_(n), degree_(degree), variance_(variance) {
    if (n < 0 || n > MultiIndex::kMaxDim) throw ContractViolation("dimension out of range");
    // Degrees above n are admitted and always zero (e.g. d of a top form).
    if (degree < 0) throw ContractViolation("negative degree");
  }

  static GradedTensor zero(int n, int degree, Variance v) { return GradedTensor(n, degree, v); }

  static GradedTensor basis_element(const MultiIndex& idx, Variance v,
                                    C coeff = Traits::one()) {
    GradedTensor t(idx.dim(), idx.degree(), v);
    t.add_term(idx, std::move(coeff));
    return t;
  }

  static GradedTensor scalar(int n, C value, Variance v = Variance::covariant) {
    return basis_element(MultiIndex::empty(n), v, std::move(value));
  }

  int dim() const { return n_; }
  int degree() const { return degree_; }
  Variance variance() const { return variance_; }
  bool is_covariant() const { return variance_ == Variance::covariant; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Accumulates `c` into the coefficient of `idx`; drops the entry if the
  /// sum is zero.
  void add_term(const MultiIndex& idx, C c) {
    if (idx.dim() != n_ || idx.degree() != degree_) {
      throw ContractViolation("multi-index " + idx.str() + " does not match degree " +
                              std::to_string(degree_) + " in dimension " + std::to_string(n_));
    }
    if (Traits::is_zero(c)) return;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
      terms_.emplace(idx, std::move(c));
      return;
    }
    C sum = it->second + c;
    if (Traits::is_zero(sum)) {
      terms_.erase(it);
    } else {
      it->second = std::move(sum);
    }
  }

  void set(const MultiIndex& idx, C c) {
    terms_.erase(idx);
    add_term(idx, std::move(c));
  }

  C coefficient(const MultiIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Traits::zero() : it->second;
  }
  C coefficient(std::initializer_list<int> axes) const {
    return coefficient(MultiIndex(n_, axes));
  }

  /// Applies f to every coefficient, yielding a tensor over another ring.
  template <class F>
  auto map(F&& f) const -> GradedTensor<decltype(f(std::declval<const C&>()))> {
    using R = decltype(f(std::declval<const C&>()));
    GradedTensor<R> out(n_, degree_, variance_);
    for (const auto& [idx, c] : terms_) out.add_term(idx, f(c));
    return out;
  }

  GradedTensor& operator+=(const GradedTensor& o) {
    require_same_shape(o, "+");
    for (const auto& [idx, c] : o.terms_) add_term(idx, c);
    return *this;
  }
  GradedTensor& operator-=(const GradedTensor& o) {
    require_same_shape(o, "-");
    for (const auto& [idx, c] : o.terms_) add_term(idx, -c);
    return *this;
  }
  friend GradedTensor operator+(GradedTensor a, const GradedTensor& b) { return a += b; }
  friend GradedTensor operator-(GradedTensor a, const GradedTensor& b) { return a -= b; }
  friend GradedTensor operator-(const GradedTensor& a) {
    GradedTensor out(a.n_, a.degree_, a.variance_);
    for (const auto& [idx, c] : a.terms_) out.add_term(idx, -c);
    return out;
  }
  friend GradedTensor operator*(const C& s, const GradedTensor& a) {
    GradedTensor out(a.n_, a.degree_, a.variance_);
    if (Traits::is_zero(s)) return out;
    for (const auto& [idx, c] : a.terms_) out.add_term(idx, s * c);
    return out;
  }

  bool same_shape(const GradedTensor& o) const {
    return n_ == o.n_ && degree_ == o.degree_ && variance_ == o.variance_;
  }

  /// Exact structural equality (meaningful for exact coefficient rings).
  friend bool operator==(const GradedTensor& a, const GradedTensor& b) {
    return a.same_shape(b) && a.terms_ == b.terms_;
  }

 private:
  void require_same_shape(const GradedTensor& o, const char* op) const {
    if (!same_shape(o)) {
      throw ContractViolation(std::string("shape mismatch in tensor ") + op);
    }
  }

  int n_ = 0;
  int degree_ = 0;
  Variance variance_ = Variance::covariant;
  Terms terms_;
};

/// Exterior product. Both factors must share dimension and variance.
template <class C>
GradedTensor<C> wedge(const GradedTensor<C>& a, const GradedTensor<C>& b) {
  if (a.dim() != b.dim()) throw ContractViolation("wedge: dimension mismatch");
  if (a.variance() != b.variance()) throw ContractViolation("wedge: variance mismatch");
  if (a.degree() + b.degree() > a.dim()) {
    throw ContractViolation("wedge: total degree exceeds dimension");
  }
  GradedTensor<C> out(a.dim(), a.degree() + b.degree(), a.variance());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      const int s = wedge_sign(ia, ib);
      if (s == 0) continue;
      const MultiIndex joined = MultiIndex::from_mask(a.dim(), ia.mask() | ib.mask());
      C prod = ca * cb;
      if (s < 0) prod = -prod;
      out.add_term(joined, std::move(prod));
    }
  }
  return out;
}

/// Contracts `inner` (degree q) into `outer` (degree p >= q, opposite
/// variance). For a decomposable inner h1^...^hq this is
/// i(hq) o ... o i(h1) applied to outer, extended bilinearly.
template <class C>
GradedTensor<C> contract(const GradedTensor<C>& inner, const GradedTensor<C>& outer) {
  if (inner.dim() != outer.dim()) throw ContractViolation("interior product: dimension mismatch");
  if (inner.variance() == outer.variance()) {
    throw ContractViolation("interior product needs opposite variances");
  }
  if (inner.degree() > outer.degree()) {
    throw ContractViolation("interior product: inner degree " + std::to_string(inner.degree()) +
                            " exceeds outer degree " + std::to_string(outer.degree()));
  }
  GradedTensor<C> out(outer.dim(), outer.degree() - inner.degree(), outer.variance());
  for (const auto& [ji, ci] : inner.terms()) {
    for (const auto& [jo, co] : outer.terms()) {
      MultiIndex rest;
      const int s = contract_sign(ji, jo, rest);
      if (s == 0) continue;
      C prod = ci * co;
      if (s < 0) prod = -prod;
      out.add_term(rest, std::move(prod));
    }
  }
  return out;
}

/// i(h)u for a vector h and a covariant p-form u. A 0-form yields zero.
template <class C>
GradedTensor<C> interior_vector(const GradedTensor<C>& h, const GradedTensor<C>& u) {
  if (h.degree() != 1 || h.variance() != Variance::contravariant) {
    throw ContractViolation("interior_vector: first argument must be a vector");
  }
  if (u.variance() != Variance::covariant) {
    throw ContractViolation("interior_vector: second argument must be a form");
  }
  if (u.degree() == 0) {
    if (h.dim() != u.dim()) throw ContractViolation("interior product: dimension mismatch");
    return GradedTensor<C>(u.dim(), 0, Variance::covariant);
  }
  return contract(h, u);
}

/// i(T)u for a q-vector T and a p-form u, q <= p.
template <class C>
GradedTensor<C> interior_multivector(const GradedTensor<C>& t, const GradedTensor<C>& u) {
  if (t.variance() != Variance::contravariant || u.variance() != Variance::covariant) {
    throw ContractViolation("interior_multivector: expects (multivector, form)");
  }
  return contract(t, u);
}

/// i(u*)H for a form u* and a p-vector H ("opposite direction").
template <class C>
GradedTensor<C> interior_form(const GradedTensor<C>& u, const GradedTensor<C>& h) {
  if (u.variance() != Variance::covariant || h.variance() != Variance::contravariant) {
    throw ContractViolation("interior_form: expects (form, multivector)");
  }
  if (h.degree() == 0 && u.degree() == 1) {
    if (h.dim() != u.dim()) throw ContractViolation("interior product: dimension mismatch");
    return GradedTensor<C>(h.dim(), 0, Variance::contravariant);
  }
  return contract(u, h);
}

/// Full contraction <Phi, T> of a p-form with a p-vector.
template <class C>
C pairing(const GradedTensor<C>& phi, const GradedTensor<C>& t) {
  if (phi.degree() != t.degree()) throw ContractViolation("pairing: degree mismatch");
  return interior_multivector(t, phi).coefficient(MultiIndex::empty(phi.dim()));
}

/// Reinterprets a tensor in a higher dimension (axes keep their numbers).
template <class C>
GradedTensor<C> embed(const GradedTensor<C>& t, int n) {
  if (n < t.dim()) throw ContractViolation("embed: target dimension smaller than source");
  GradedTensor<C> out(n, t.degree(), t.variance());
  for (const auto& [idx, c] : t.terms()) out.add_term(MultiIndex::from_mask(n, idx.mask()), c);
  return out;
}

}  // namespace premetric
