#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "premetric/rational.hpp"
#include "premetric/residual.hpp"

namespace premetric {

/// One row of the algebraic identity suite: how many exact checks of an
/// identity ran in a given dimension and how many failed.
struct IdentityResult {
  std::string name;
  int dim = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  bool pass() const { return failures == 0; }
};

struct IdentityReport {
  std::vector<IdentityResult> results;
  bool all_pass() const;
};

/// Random tensor with rational coefficients p/q, |p| <= 5, 1 <= q <= 4; each
/// basis element is present with probability 1/2.
RationalTensor random_rational_tensor(Rng& rng, int n, int degree, Variance v);

IdentityResult check_antiderivation(int n, int trials, Rng& rng);
IdentityResult check_anticommutation(int n, int trials, Rng& rng);
IdentityResult check_bilinear_extension(int n, int trials, Rng& rng);
IdentityResult check_graded_anticommutativity(int n, int trials, Rng& rng);
IdentityResult check_pairing(int n, int trials, Rng& rng);
IdentityResult check_duality_involution(int n);
IdentityResult check_dual_vs_contraction(int n, int trials, Rng& rng);
IdentityResult check_self_annihilation(int n);
IdentityResult check_dual_complement(int n);
IdentityResult check_vee_bilinearity(int n, int trials, Rng& rng);
IdentityResult check_vee_symmetry(int n, int trials, Rng& rng);

/// Runs every suite for each dimension with a deterministic generator per
/// dimension. dims must lie in [2, 6] and trials must be >= 1.
IdentityReport run_identities(const std::vector<int>& dims, int trials, std::uint64_t seed);

}  // namespace premetric
