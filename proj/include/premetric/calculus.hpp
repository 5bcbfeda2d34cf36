#pragma once

#include <span>
#include <vector>

#include "premetric/expr.hpp"
#include "premetric/poincare.hpp"

namespace premetric {

/// d on forms with expression coefficients. Axis k differentiates along
/// chart coordinate k-1, so a 3-dimensional form whose coefficients also
/// depend on a fourth coordinate gets the spatial d only.
Field exterior_derivative(const Field& phi);

/// The scalar g with d(i_X omega) = g omega.
Expr div(const Field& x, const VolumeContext& vol);

/// L_T(Phi) = d(i_T Phi) - (-1)^{deg T} i_T(d Phi), for q-vector T and
/// p-form Phi with q <= p.
Field lie_derivative(const Field& t, const Field& phi);

/// Coefficientwise derivative along the chart's "xi" coordinate.
Field time_derivative(const Field& phi, const Chart& chart);

/// Coefficientwise derivative along coordinate `var`.
Field partial(const Field& phi, int var);

/// Numerical value of every coefficient at a point.
GradedTensor<double> evaluate(const Field& t, std::span<const double> point);

/// max |coefficient| at a point (0 for the zero tensor).
double max_abs_at(const Field& t, std::span<const double> point);

/// Convenience constructors for fields on an n-dimensional algebra.
Field vector_field(const std::vector<Expr>& components);
Field one_form(const std::vector<Expr>& components);

}  // namespace premetric
