#include "premetric/identities.hpp"

#include <stdexcept>

#include "premetric/poincare.hpp"
#include "premetric/vvalued.hpp"

namespace premetric {

namespace {

using RT = RationalTensor;

Rational random_rational(Rng& rng) {
  return Rational(rng.integer(-5, 5)) / Rational(rng.integer(1, 4));
}

RT vec(Rng& rng, int n) { return random_rational_tensor(rng, n, 1, Variance::contravariant); }

RT form(Rng& rng, int n, int p) { return random_rational_tensor(rng, n, p, Variance::covariant); }

class Counter {
 public:
  Counter(std::string name, int n) {
    r_.name = std::move(name);
    r_.dim = n;
  }
  void record(bool ok) {
    ++r_.trials;
    if (!ok) ++r_.failures;
  }
  IdentityResult result() const { return r_; }

 private:
  IdentityResult r_;
};

}  // namespace

bool IdentityReport::all_pass() const {
  for (const auto& r : results) {
    if (!r.pass()) return false;
  }
  return true;
}

RT random_rational_tensor(Rng& rng, int n, int degree, Variance v) {
  RT t(n, degree, v);
  for (const MultiIndex& idx : basis(n, degree)) {
    if (rng.integer(0, 1) == 0) continue;
    t.add_term(idx, random_rational(rng));
  }
  return t;
}

IdentityResult check_antiderivation(int n, int trials, Rng& rng) {
  Counter c("antiderivation", n);
  for (int t = 0; t < trials; ++t) {
    const int p = rng.integer(0, std::min(3, n));
    const int q = rng.integer(p == 0 ? 1 : 0, std::min(3, n - p));
    const RT h = vec(rng, n);
    const RT u = form(rng, n, p);
    const RT v = form(rng, n, q);
    // i(h) of a 0-form is zero, so that term drops out entirely.
    RT rhs(n, p + q - 1, Variance::covariant);
    if (p > 0) rhs += wedge(interior_vector(h, u), v);
    if (q > 0) {
      const RT second = wedge(u, interior_vector(h, v));
      if (p & 1) {
        rhs -= second;
      } else {
        rhs += second;
      }
    }
    c.record(interior_vector(h, wedge(u, v)) == rhs);
  }
  return c.result();
}

IdentityResult check_anticommutation(int n, int trials, Rng& rng) {
  Counter c("anticommutation", n);
  for (int t = 0; t < trials; ++t) {
    const int p = rng.integer(std::min(2, n), n);
    const RT x = vec(rng, n);
    const RT y = vec(rng, n);
    const RT u = form(rng, n, p);
    c.record(interior_vector(x, interior_vector(y, u)) == -interior_vector(y, interior_vector(x, u)));
  }
  return c.result();
}

IdentityResult check_bilinear_extension(int n, int trials, Rng& rng) {
  Counter c("bilinear_extension", n);
  for (int t = 0; t < trials; ++t) {
    const int p = rng.integer(1, n);
    const int q = rng.integer(1, p);
    const RT h1 = random_rational_tensor(rng, n, q, Variance::contravariant);
    const RT h2 = random_rational_tensor(rng, n, q, Variance::contravariant);
    const RT u1 = form(rng, n, p);
    const RT u2 = form(rng, n, p);
    const Rational a = random_rational(rng), b = random_rational(rng);
    const Rational cc = random_rational(rng), d = random_rational(rng);
    const RT lhs = interior_multivector(a * h1 + b * h2, cc * u1 + d * u2);
    const RT rhs = (a * cc) * interior_multivector(h1, u1) + (a * d) * interior_multivector(h1, u2) +
                   (b * cc) * interior_multivector(h2, u1) + (b * d) * interior_multivector(h2, u2);
    c.record(lhs == rhs);
  }
  return c.result();
}

IdentityResult check_graded_anticommutativity(int n, int trials, Rng& rng) {
  Counter c("graded_anticommutativity", n);
  for (int t = 0; t < trials; ++t) {
    const int p = rng.integer(0, n);
    const int q = rng.integer(0, n - p);
    const RT a = form(rng, n, p);
    const RT b = form(rng, n, q);
    const RT ba = wedge(b, a);
    c.record(wedge(a, b) == (((p * q) & 1) ? -ba : ba));
  }
  return c.result();
}

IdentityResult check_pairing(int n, int trials, Rng& rng) {
  Counter c("pairing", n);
  for (int t = 0; t < trials; ++t) {
    const int p = rng.integer(0, n);
    const auto& b = basis(n, p);
    const MultiIndex i = b[rng.integer(0, static_cast<int>(b.size()) - 1)];
    const MultiIndex j = b[rng.integer(0, static_cast<int>(b.size()) - 1)];
    const Rational kron = pairing(RT::basis_element(i, Variance::covariant),
                                  RT::basis_element(j, Variance::contravariant));
    bool ok = kron == Rational(i == j ? 1 : 0);

    const RT phi1 = form(rng, n, p), phi2 = form(rng, n, p);
    const RT tv = random_rational_tensor(rng, n, p, Variance::contravariant);
    const Rational a = random_rational(rng), s = random_rational(rng);
    ok = ok && pairing(a * phi1 + s * phi2, tv) == a * pairing(phi1, tv) + s * pairing(phi2, tv);
    c.record(ok);
  }
  return c.result();
}

IdentityResult check_duality_involution(int n) {
  Counter c("duality_involution", n);
  for (int p = 0; p <= n; ++p) c.record(dual_inverse_check(p, n).holds);
  return c.result();
}

IdentityResult check_dual_vs_contraction(int n, int trials, Rng& rng) {
  Counter c("dual_vs_contraction", n);
  const RT omega = VolumeContext(n).omega<Rational>();
  for (int t = 0; t < trials; ++t) {
    const int p = rng.integer(1, n);
    RT decomposable = vec(rng, n);
    for (int k = 1; k < p; ++k) decomposable = wedge(decomposable, vec(rng, n));
    c.record(dual_of_multivector(decomposable) == interior_multivector(decomposable, omega));
  }
  return c.result();
}

IdentityResult check_self_annihilation(int n) {
  Counter c("self_annihilation", n);
  for (int p = 1; 2 * p <= n; ++p) {
    for (const MultiIndex& idx : basis(n, p)) {
      const RT e = RT::basis_element(idx, Variance::contravariant);
      c.record(interior_multivector(e, dual_of_multivector(e)).is_zero());
    }
  }
  return c.result();
}

IdentityResult check_dual_complement(int n) {
  Counter c("dual_complement", n);
  for (int p = 0; p <= n; ++p) {
    for (const MultiIndex& idx : basis(n, p)) {
      const RT d = dual_of_multivector(RT::basis_element(idx, Variance::contravariant));
      c.record(d.size() == 1 && d.terms().begin()->first == idx.complement());
    }
  }
  return c.result();
}

namespace {

VValuedTensor<Rational> random_vvalued(Rng& rng, int n, int degree, Variance v) {
  return VValuedTensor<Rational>({{1, random_rational_tensor(rng, n, degree, v)},
                                  {2, random_rational_tensor(rng, n, degree, v)}});
}

VValuedTensor<Rational> scaled(const VValuedTensor<Rational>& t, const Rational& s) {
  return t.map_components([&s](const RT& c) { return s * c; });
}

VValuedTensor<Rational> sum(const VValuedTensor<Rational>& a, const VValuedTensor<Rational>& b) {
  VValuedTensor<Rational> out;
  for (std::size_t k = 0; k < a.components().size(); ++k) {
    out.add(a.components()[k].first, a.components()[k].second + b.components()[k].second);
  }
  return out;
}

}  // namespace

IdentityResult check_vee_bilinearity(int n, int trials, Rng& rng) {
  Counter c("vee_bilinearity", n);
  for (int t = 0; t < trials; ++t) {
    const int p = rng.integer(1, n);
    const int q = rng.integer(1, p);
    const auto t1 = random_vvalued(rng, n, q, Variance::contravariant);
    const auto t2 = random_vvalued(rng, n, q, Variance::contravariant);
    const auto phi1 = random_vvalued(rng, n, p, Variance::covariant);
    const auto phi2 = random_vvalued(rng, n, p, Variance::covariant);
    const Rational a = random_rational(rng), b = random_rational(rng);

    SymValuedTensor<Rational> left_rhs = vee_interior(scaled(t1, a), phi1);
    left_rhs += vee_interior(scaled(t2, b), phi1);
    SymValuedTensor<Rational> right_rhs = vee_interior(t1, scaled(phi1, a));
    right_rhs += vee_interior(t1, scaled(phi2, b));

    const bool left = vee_interior(sum(scaled(t1, a), scaled(t2, b)), phi1).components() ==
                      left_rhs.components();
    const bool right = vee_interior(t1, sum(scaled(phi1, a), scaled(phi2, b))).components() ==
                       right_rhs.components();
    c.record(left && right);
  }
  return c.result();
}

IdentityResult check_vee_symmetry(int n, int trials, Rng& rng) {
  Counter c("vee_symmetry", n);
  for (int t = 0; t < trials; ++t) {
    const int p = rng.integer(1, n);
    const int q = rng.integer(1, p);
    const auto tv = random_vvalued(rng, n, q, Variance::contravariant);
    const auto phi = random_vvalued(rng, n, p, Variance::covariant);
    auto swap = [](const auto& x) {
      using T = std::decay_t<decltype(x)>;
      return T({{1, x.components()[1].second}, {2, x.components()[0].second}});
    };
    c.record(vee_interior(tv, phi).at(1, 2) == vee_interior(swap(tv), swap(phi)).at(1, 2));
  }
  return c.result();
}

IdentityReport run_identities(const std::vector<int>& dims, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (dims.empty()) throw std::invalid_argument("at least one dimension is required");
  for (int n : dims) {
    if (n < 2 || n > 6) throw std::invalid_argument("dimensions must lie in [2, 6]");
  }
  IdentityReport report;
  for (int n : dims) {
    Rng rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n));
    auto& r = report.results;
    r.push_back(check_antiderivation(n, trials, rng));
    r.push_back(check_anticommutation(n, trials, rng));
    r.push_back(check_bilinear_extension(n, trials, rng));
    r.push_back(check_graded_anticommutativity(n, trials, rng));
    r.push_back(check_pairing(n, trials, rng));
    r.push_back(check_duality_involution(n));
    r.push_back(check_dual_vs_contraction(n, trials, rng));
    r.push_back(check_self_annihilation(n));
    r.push_back(check_dual_complement(n));
    r.push_back(check_vee_bilinearity(n, trials, rng));
    r.push_back(check_vee_symmetry(n, trials, rng));
  }
  return report;
}

}  // namespace premetric
