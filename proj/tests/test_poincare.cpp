#include <doctest.h>

#include "helpers.hpp"
#include "premetric/catalog.hpp"
#include "premetric/electrodyn.hpp"
#include "premetric/identities.hpp"

using namespace premetric;
using test::e;
using test::eps;
using R = Rational;

TEST_CASE("volume pair") {
  const VolumeContext vol(4);
  CHECK(pairing(vol.omega<R>(), vol.omega_bar<R>()) == R(1));
  CHECK_THROWS_AS(VolumeContext(0), ContractViolation);
}

TEST_CASE("dual of a multivector") {
  CHECK(dual_of_multivector(e(3, {1})) == eps(3, {2, 3}));
  CHECK(dual_of_multivector(e(3, {1, 3})) == -eps(3, {2}));
  CHECK(dual_of_multivector(RationalTensor::scalar(3, R(1), Variance::contravariant)) ==
        eps(3, {1, 2, 3}));
  // Against the iterated contraction i(e3) i(e1) omega.
  const auto omega = VolumeContext(3).omega<R>();
  CHECK(interior_vector(e(3, {3}), interior_vector(e(3, {1}), omega)) == -eps(3, {2}));
}

TEST_CASE("dual of a form") {
  CHECK(dual_of_form(eps(3, {1})) == e(3, {2, 3}));
  CHECK(dual_of_form(eps(3, {2, 3})) == e(3, {1}));
  // D_2(dx^dxi) in four dimensions is again the contraction into omega_bar.
  const auto omega_bar = VolumeContext(4).omega_bar<R>();
  CHECK(dual_of_form(eps(4, {1, 4})) == interior_form(eps(4, {4}), interior_form(eps(4, {1}), omega_bar)));
}

TEST_CASE("dual inverse check") {
  auto r = dual_inverse_check(1, 3);
  CHECK(r.holds);
  CHECK(r.sign == 1);
  r = dual_inverse_check(2, 4);
  CHECK(r.holds);
  CHECK(r.sign == 1);
  r = dual_inverse_check(1, 2);
  CHECK(r.holds);
  CHECK(r.sign == -1);
  for (int n = 2; n <= 6; ++n) {
    for (int p = 0; p <= n; ++p) CHECK(dual_inverse_check(p, n).holds);
  }
}

TEST_CASE("inverse duals") {
  Rng rng(8);
  for (int n = 2; n <= 5; ++n) {
    for (int p = 0; p <= n; ++p) {
      const auto psi = random_rational_tensor(rng, n, p, Variance::covariant);
      const auto t = multivector_dual_to(psi);
      CHECK(interior_multivector(t, VolumeContext(n).omega<R>()) == psi);
      const auto h = random_rational_tensor(rng, n, p, Variance::contravariant);
      CHECK(interior_form(form_dual_to(h), VolumeContext(n).omega_bar<R>()) == h);
    }
  }
}

TEST_CASE("duality properties") {
  Rng rng(21);
  for (int n = 2; n <= 6; ++n) {
    CHECK(check_dual_vs_contraction(n, 100, rng).pass());
    CHECK(check_self_annihilation(n).pass());
    CHECK(check_dual_complement(n).pass());
    CHECK(check_duality_involution(n).pass());
  }
}

TEST_CASE("divergence of a bivector field") {
  const Expr x = Expr::var(0), y = Expr::var(1), z = Expr::var(2), xi = Expr::var(3);
  const Expr f = sin(x) * y + x * z * xi;
  const Field t = Field::basis_element(MultiIndex(4, {1, 2}), Variance::contravariant, f);
  const Field d = delta(t);
  // f_x dy - f_y dx
  const Field expected = vector_field({-differentiate(f, 1), differentiate(f, 0), 0.0, 0.0});
  CHECK(test::max_over(d - expected, test::points(4)) <= 1e-12);

  const Field c = Field::basis_element(MultiIndex(4, {2, 4}), Variance::contravariant, Expr(3.0));
  CHECK(delta(c).is_zero());
}

TEST_CASE("divergence matches the component formula d_m T^{mn}") {
  const auto cfg = random_polynomial_config(4);
  const Field gbar = build_spacetime(cfg).Gbar;
  const Field d = delta(gbar);
  std::vector<Expr> comps(4, Expr(0.0));
  for (int nu = 1; nu <= 4; ++nu) {
    for (int mu = 1; mu <= 4; ++mu) {
      if (mu == nu) continue;
      Expr t = mu < nu ? gbar.coefficient({mu, nu}) : -gbar.coefficient({nu, mu});
      comps[nu - 1] = comps[nu - 1] + differentiate(t, mu - 1);
    }
  }
  CHECK(test::max_over(d - vector_field(comps), test::points(4)) <= 1e-10);
}

TEST_CASE("transported divergence identities") {
  const auto pts = test::points(4);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const SpacetimePair p = build_spacetime(random_polynomial_config(seed));
    const Field df = exterior_derivative(p.F);
    const Field dg = exterior_derivative(p.G);
    const Field dfbar = delta(p.Fbar);
    const Field dgbar = delta(p.Gbar);
    const double s = 1e-10 * std::max(1.0, test::max_over(interior_vector(dgbar, p.G), pts));
    CHECK(test::max_over(interior_vector(dgbar, p.G) - contract(p.Fbar, df), pts) <= s);
    CHECK(test::max_over(interior_vector(dfbar, p.F) - contract(p.Gbar, dg), pts) <= s);
    CHECK(test::max_over(interior_vector(dfbar, p.G) + contract(p.Fbar, dg), pts) <= s);
    CHECK(test::max_over(interior_vector(dgbar, p.F) + contract(p.Gbar, df), pts) <= s);
  }
}
