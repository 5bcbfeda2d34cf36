#pragma once

#include <span>
#include <string>
#include <vector>

#include "premetric/electrodyn.hpp"

namespace premetric {

/// Finite-difference evaluation of the nonlinear spacetime balance. F, G and
/// their bivector duals are evaluated pointwise; dF and dG come from central
/// differences of point values, never from symbolic differentiation.
struct OracleValues {
  double dF = 0.0;            // max |dF|
  double dG = 0.0;            // max |dG|
  double flow_ff = 0.0;       // max |i_Fbar dF|
  double flow_gg = 0.0;       // max |i_Gbar dG|
  double flow_mixed = 0.0;    // max |i_Fbar dG + i_Gbar dF|
};

OracleValues fd_balance_at(const EMConfig& cfg, std::span<const double> point, double h = 1e-5);
OracleValues fd_balance_at(const SpacetimePair& pair, std::span<const double> point,
                           double h = 1e-5);

struct OracleResult {
  std::string family;
  std::size_t n_points = 0;
  double max_flow = 0.0;
  double scale = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Runs fd_balance_at over the points; passes iff the largest flow residual is
/// <= tol * max(1, scale), scale being the configuration's derivative scale.
OracleResult fd_balance_oracle(const std::string& family, const EMConfig& cfg,
                               const std::vector<std::vector<double>>& points, double tol = 1e-8,
                               double h = 1e-5);

}  // namespace premetric
