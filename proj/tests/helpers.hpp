#pragma once

#include <initializer_list>
#include <vector>

#include "premetric/calculus.hpp"
#include "premetric/rational.hpp"
#include "premetric/residual.hpp"

namespace test {

using premetric::Field;
using premetric::MultiIndex;
using premetric::Variance;

template <class C = premetric::Rational>
premetric::GradedTensor<C> eps(int n, std::initializer_list<int> axes, C c = C(1)) {
  return premetric::GradedTensor<C>::basis_element(MultiIndex(n, axes), Variance::covariant, c);
}

template <class C = premetric::Rational>
premetric::GradedTensor<C> e(int n, std::initializer_list<int> axes, C c = C(1)) {
  return premetric::GradedTensor<C>::basis_element(MultiIndex(n, axes), Variance::contravariant, c);
}

inline std::vector<std::vector<double>> points(int n, int count = 64, std::uint64_t seed = 3) {
  return premetric::sample_points(
      premetric::SamplePlan::random(premetric::SamplePlan::standard(n).box, count, seed));
}

/// Largest coefficient magnitude of t over the points.
inline double max_over(const Field& t, const std::vector<std::vector<double>>& pts) {
  double m = 0.0;
  for (const auto& p : pts) m = std::max(m, premetric::max_abs_at(t, p));
  return m;
}

inline double max_over(const premetric::Expr& e, const std::vector<std::vector<double>>& pts) {
  double m = 0.0;
  for (const auto& p : pts) m = std::max(m, std::abs(premetric::eval(e, p)));
  return m;
}

}  // namespace test
