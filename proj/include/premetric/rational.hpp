#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "premetric/graded_tensor.hpp"

namespace premetric {

/// Exact rational coefficients for the algebraic identity suites.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using RationalTensor = GradedTensor<Rational>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace premetric
