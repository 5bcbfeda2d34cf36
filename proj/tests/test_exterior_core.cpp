#include <doctest.h>

#include "helpers.hpp"
#include "premetric/identities.hpp"

using namespace premetric;
using test::e;
using test::eps;
using R = Rational;

TEST_CASE("multi-index basics") {
  const MultiIndex i(4, {1, 3});
  CHECK(i.degree() == 2);
  CHECK(i.axes() == std::vector<int>{1, 3});
  CHECK(i.complement() == MultiIndex(4, {2, 4}));
  CHECK(i.sigma() == 1);
  CHECK(MultiIndex(3, {2, 3}).sigma() == 2);
  CHECK_THROWS_AS(MultiIndex(3, {2, 1}), ContractViolation);
  CHECK_THROWS_AS(MultiIndex(3, {1, 4}), ContractViolation);
  CHECK_THROWS_AS(MultiIndex(3, {2, 2}), ContractViolation);
}

TEST_CASE("basis enumeration is lexicographic") {
  const auto& b = basis(4, 2);
  REQUIRE(b.size() == 6);
  CHECK(b[0] == MultiIndex(4, {1, 2}));
  CHECK(b[1] == MultiIndex(4, {1, 3}));
  CHECK(b[2] == MultiIndex(4, {1, 4}));
  CHECK(b[3] == MultiIndex(4, {2, 3}));
  CHECK(b[5] == MultiIndex(4, {3, 4}));
  CHECK(basis(5, 0).size() == 1);
  CHECK(basis(6, 3).size() == 20);
}

TEST_CASE("wedge") {
  CHECK(wedge(eps(3, {1}), eps(3, {2})) == eps(3, {1, 2}));
  CHECK(wedge(eps(3, {2}), eps(3, {1})) == -eps(3, {1, 2}));
  CHECK(wedge(eps(3, {1}), eps(3, {1})).is_zero());

  const Field x_eps1 = Field::basis_element(MultiIndex(3, {1}), Variance::covariant, Expr::var(0));
  const Field eps2 = Field::basis_element(MultiIndex(3, {2}), Variance::covariant);
  const Field w = wedge(x_eps1, eps2);
  REQUIRE(w.size() == 1);
  CHECK(w.coefficient({1, 2}) == Expr::var(0));

  CHECK_THROWS_AS(wedge(eps(3, {1}), eps(4, {2})), ContractViolation);
  CHECK_THROWS_AS(wedge(eps(3, {1}), e(3, {2})), ContractViolation);
  CHECK_THROWS_AS(wedge(eps(3, {1, 2}), eps(3, {1, 3})), ContractViolation);
}

TEST_CASE("interior product of a vector") {
  const auto w = eps(2, {1, 2});
  CHECK(interior_vector(e(2, {1}), w) == eps(2, {2}));
  CHECK(interior_vector(e(2, {2}), w) == -eps(2, {1}));
  CHECK(interior_vector(e(2, {1}) + e(2, {2}), w) == eps(2, {2}) - eps(2, {1}));
  // 0-forms contract to zero.
  CHECK(interior_vector(e(3, {1}), RationalTensor::scalar(3, R(5))).is_zero());
}

TEST_CASE("interior product of a multivector") {
  const auto w = eps(3, {1, 2});
  CHECK(interior_multivector(e(3, {1, 2}), w) == RationalTensor::scalar(3, R(1)));
  CHECK(interior_multivector(wedge(e(3, {2}), e(3, {1})), w) == RationalTensor::scalar(3, R(-1)));
  CHECK(interior_multivector(e(3, {1, 2}), eps(3, {1, 2, 3})) == eps(3, {3}));
  CHECK_THROWS_AS(interior_multivector(e(3, {1, 2}), eps(3, {1})), ContractViolation);
}

TEST_CASE("interior product of a form into a multivector") {
  const auto h = e(3, {1, 2});
  CHECK(interior_form(eps(3, {1}), h) == e(3, {2}));
  CHECK(interior_form(eps(3, {2}), h) == -e(3, {1}));
  CHECK(interior_form(eps(3, {3}), h).is_zero());
  CHECK_THROWS_AS(interior_form(eps(3, {1}), e(4, {1, 2})), ContractViolation);
}

TEST_CASE("pairing") {
  CHECK(pairing(eps(2, {1, 2}), e(2, {1, 2})) == R(1));
  CHECK(pairing(eps(3, {1, 2}), e(3, {1, 3})) == R(0));
  CHECK_THROWS_AS(pairing(eps(3, {1, 2}), e(3, {1})), ContractViolation);
}

TEST_CASE("tensor arithmetic drops cancelled terms") {
  auto t = eps(3, {1}) + eps(3, {2});
  t -= eps(3, {1});
  CHECK(t.size() == 1);
  CHECK(t == eps(3, {2}));
  CHECK((R(0) * t).is_zero());
  CHECK_THROWS_AS(t += eps(3, {1, 2}), ContractViolation);
}

TEST_CASE("exact identity suites") {
  Rng rng(11);
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(check_antiderivation(n, 200, rng).pass());
    CHECK(check_anticommutation(n, 200, rng).pass());
    CHECK(check_bilinear_extension(n, 100, rng).pass());
    CHECK(check_graded_anticommutativity(n, 200, rng).pass());
    CHECK(check_pairing(n, 200, rng).pass());
  }
}

TEST_CASE("identity suites detect a broken law") {
  // A wrong sign in the antiderivation law must be caught on random inputs.
  Rng rng(5);
  int caught = 0;
  for (int t = 0; t < 50; ++t) {
    const auto h = random_rational_tensor(rng, 4, 1, Variance::contravariant);
    const auto u = random_rational_tensor(rng, 4, 1, Variance::covariant);
    const auto v = random_rational_tensor(rng, 4, 2, Variance::covariant);
    const auto wrong = wedge(interior_vector(h, u), v) + wedge(u, interior_vector(h, v));
    if (!(interior_vector(h, wedge(u, v)) == wrong)) ++caught;
  }
  CHECK(caught > 25);
}

TEST_CASE("run_identities validates its input and is deterministic") {
  CHECK_THROWS_AS(run_identities({3}, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_identities({7}, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_identities({}, 1, 1), std::invalid_argument);
  const auto a = run_identities({3, 4}, 20, 42);
  const auto b = run_identities({3, 4}, 20, 42);
  REQUIRE(a.results.size() == b.results.size());
  CHECK(a.all_pass());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    CHECK(a.results[i].name == b.results[i].name);
    CHECK(a.results[i].trials == b.results[i].trials);
  }
}
