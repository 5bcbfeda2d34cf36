#include "premetric/poincare.hpp"

#include "premetric/calculus.hpp"

namespace premetric {

DualInverseResult dual_inverse_check(int p, int n) {
  if (n < 1 || p < 0 || p > n) throw ContractViolation("dual_inverse_check: need 0 <= p <= n");
  DualInverseResult r;
  r.sign = detail::involution_sign(p, n);
  r.holds = true;
  for (const MultiIndex& idx : basis(n, p)) {
    const auto vec = GradedTensor<int>::basis_element(idx, Variance::contravariant);
    const auto form = GradedTensor<int>::basis_element(idx, Variance::covariant);
    const auto back_vec = dual_of_form(dual_of_multivector(vec));
    const auto back_form = dual_of_multivector(dual_of_form(form));
    if (!(back_vec == r.sign * vec) || !(back_form == r.sign * form)) r.holds = false;
  }
  return r;
}

Field delta(const Field& t) {
  if (t.variance() != Variance::contravariant) throw ContractViolation("delta expects a multivector");
  if (t.degree() < 1) throw ContractViolation("delta needs degree >= 1");
  Field out = dual_of_form(exterior_derivative(dual_of_multivector(t)));
  return (t.degree() & 1) ? -out : out;
}

}  // namespace premetric
