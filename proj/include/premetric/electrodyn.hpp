#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "premetric/calculus.hpp"
#include "premetric/residual.hpp"
#include "premetric/vvalued.hpp"

namespace premetric {

/// Field content (E, B; alpha, beta) on the spacetime chart (x, y, z, xi),
/// xi = ct. Only spatial components exist; coefficients may depend on xi.
struct EMConfig {
  Chart chart = Chart::spacetime();
  std::array<Expr, 3> E;
  std::array<Expr, 3> B;
  std::array<Expr, 3> alpha;
  std::array<Expr, 3> beta;
  /// When set, alpha_i := E^i and beta_i := B^i. Unset means "use the
  /// regime's default": true for spacetime checks, false otherwise.
  std::optional<bool> identify_alpha_with_E;

  Field e_field() const;      // 3-dimensional vector
  Field b_field() const;      // 3-dimensional vector
  Field alpha_form() const;   // 3-dimensional 1-form
  Field beta_form() const;    // 3-dimensional 1-form
  std::vector<Expr> components() const;
  void validate() const;
};

enum class Regime { prerelativistic, spacetime };

/// Applies the alpha/beta identification if requested (or defaulted on).
EMConfig resolve(const EMConfig& cfg, Regime regime);

/// omega_3 = dx^dy^dz and omega = dx^dy^dz^dxi.
Field volume3();
Field volume4();

/// The two spacetime 2-forms and their bivector duals:
/// F = i_B omega_3 + alpha^dxi, G = i_E omega_3 - beta^dxi,
/// F = i_Gbar omega, G = -i_Fbar omega.
struct SpacetimePair {
  Field F;
  Field G;
  Field Fbar;
  Field Gbar;
};

SpacetimePair build_spacetime(const EMConfig& cfg);

/// Mixed (1,1) tensor field; at(cov, contra) with 0-based slots.
class StressTensor {
 public:
  explicit StressTensor(int dim);
  int dim() const { return dim_; }
  const Expr& at(int cov, int contra) const { return comps_[cov * dim_ + contra]; }
  Expr& at(int cov, int contra) { return comps_[cov * dim_ + contra]; }
  Expr trace() const;
  /// i_X T: the vector X^s T_s^m d/dx^m.
  Field contract_vector(const Field& x) const;
  /// T(X, theta) = X^s theta_m T_s^m.
  Expr apply(const Field& x, const Field& theta) const;

 private:
  int dim_;
  std::vector<Expr> comps_;
};

// ---- pre-relativistic linear system --------------------------------------

/// L_E omega_3, L_B omega_3, the two Maxwell consistency conditions, the
/// eigen-direction conditions <beta,E> and <alpha,B>, and <alpha,E>-<beta,B>.
ResidualSet prerel_linear_residuals(const EMConfig& cfg);

/// beta^d alpha - alpha^d beta + d/dxi(1/2(<alpha,E>+<beta,B>)) omega_3.
ResidualSet cross_helicity_residual(const EMConfig& cfg);

/// eta ^ d eta.
Field helicity(const Field& eta);

/// theta = i_{E^B} omega_3; residual d theta ^ theta, plus i_E theta and
/// i_B theta which vanish identically.
ResidualSet integrability_residual(const EMConfig& cfg);
Field integrability_form(const EMConfig& cfg);

/// alpha(x)E + beta(x)B - 1/2(<alpha,E>+<beta,B>) id on the 3-space.
StressTensor stress_prerel(const EMConfig& cfg);

/// i_{E^B}(alpha^beta) - [1/2(<alpha,E>+<beta,B>)]^2, the flow postulate
/// from which <alpha,E> = <beta,B> follows once the eigen conditions hold.
Expr flow_postulate_residual(const EMConfig& cfg);

struct EigenDirections {
  bool independent = false;
  bool e_is_eigen = false;
  bool b_is_eigen = false;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

/// Numerical test of i_E T = lambda1 E and i_B T = lambda2 B at one point.
EigenDirections eigen_directions(const EMConfig& cfg, std::span<const double> point,
                                 double tol = 1e-12);

/// Warnings for sample points where E and B are linearly dependent.
std::vector<std::string> independence_warnings(const EMConfig& cfg,
                                               const std::vector<std::vector<double>>& points);

// ---- spacetime linear system ---------------------------------------------

/// dF and dG, the Lie-derivative forms L_Gbar omega and L_Fbar omega, and
/// their agreement with dF and -dG.
ResidualSet linear_spacetime_residuals(const SpacetimePair& pair);

/// T = -1/2 [C(F (x) Fbar) + C(G (x) Gbar)], contracting the second slots.
StressTensor stress_spacetime(const SpacetimePair& pair);

/// T(X, theta) = -1/2 tr[i_X F (x) i_theta Fbar + i_X G (x) i_theta Gbar].
Expr stress_bilinear(const SpacetimePair& pair, const Field& x, const Field& theta);

/// d(i_V omega) for V = X^s T_s^m d/dx^m.
ResidualSet conservation_residual(const SpacetimePair& pair, const Field& x);

/// <F,Fbar> - (<beta,B> - <alpha,E>), <F,Fbar> + <G,Gbar>,
/// <F,Gbar> - 2<alpha,B>, <G,Fbar> - 2<beta,E>.
ResidualSet invariant_relations(const EMConfig& cfg);

// ---- nonlinear system ------------------------------------------------------

struct BalanceComponents {
  Field e11;
  Field e22;
  Field e12;
};

/// Static balance i^v_{Omega_bar} dOmega + i^v_{Sigma_bar} dSigma = 0 as the
/// three displayed 1-form equations, with the V-valued route as a cross-check.
ResidualSet static_balance_residual(const EMConfig& cfg);
BalanceComponents static_balance_components(const EMConfig& cfg);
BalanceComponents static_balance_vvalued(const EMConfig& cfg);

/// Time-dependent balance: left side minus the xi-derivative flow terms.
ResidualSet time_balance_residual(const EMConfig& cfg);
BalanceComponents time_balance_components(const EMConfig& cfg);
BalanceComponents time_balance_vvalued(const EMConfig& cfg);

/// i_Fbar dF, i_Gbar dG, i_Fbar dG + i_Gbar dF via the V-valued flow, with
/// the divergence forms i_{dGbar}G, i_{dFbar}F, -(i_{dFbar}G + i_{dGbar}F)
/// as a second route.
ResidualSet spacetime_balance_residual(const SpacetimePair& pair);
BalanceComponents spacetime_balance_components(const SpacetimePair& pair);
/// i_{delta Gbar} G, i_{delta Fbar} F, i_{delta Fbar} G + i_{delta Gbar} F.
BalanceComponents divergence_form_components(const SpacetimePair& pair);

VValuedTensor<Expr> spacetime_omega(const SpacetimePair& pair);
VValuedTensor<Expr> spacetime_omega_bar(const SpacetimePair& pair);

/// F^F, G^G, F^G and the scalars <alpha,B>, <beta,E>, <alpha,E>-<beta,B>
/// recovered from the pair.
ResidualSet null_condition_check(const SpacetimePair& pair);

// ---- autoparallel fields ---------------------------------------------------

enum class AutoparallelMode { timelike, null };

/// Flat-chart autoparallel residuals. timelike: the vector u^n d_n u^m.
/// null: the 1-form i_u d(u~) + 1/2 d<u~,u>, u~ the 1-form with the same
/// components as u; it equals u^n d_n u~_m.
ResidualSet autoparallel_residuals(const Field& u, AutoparallelMode mode);

/// Largest first-derivative magnitude of the configuration's components.
double config_scale(const EMConfig& cfg, const std::vector<std::vector<double>>& points);

}  // namespace premetric
