#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "premetric/errors.hpp"

namespace premetric {

/// A strictly increasing tuple of axes (1-based) in an n-dimensional space.
/// Names the basis p-form eps^{v1}^...^eps^{vp} or p-vector e_{v1}^...^e_{vp}.
///
/// Stored as a bit set: axis k occupies bit k-1.
class MultiIndex {
 public:
  static constexpr int kMaxDim = 31;

  MultiIndex() = default;
  MultiIndex(int n, std::initializer_list<int> axes);
  MultiIndex(int n, const std::vector<int>& axes);

  static MultiIndex from_mask(int n, std::uint32_t mask);
  static MultiIndex empty(int n) { return from_mask(n, 0); }
  static MultiIndex full(int n) { return from_mask(n, full_mask(n)); }

  int dim() const { return n_; }
  int degree() const { return std::popcount(mask_); }
  std::uint32_t mask() const { return mask_; }
  std::vector<int> axes() const;

  bool contains(int axis) const { return (mask_ >> (axis - 1)) & 1u; }
  /// 0-based position of `axis` among the stored axes (number of smaller axes).
  int position(int axis) const {
    return std::popcount(mask_ & ((1u << (axis - 1)) - 1u));
  }
  MultiIndex without(int axis) const { return from_mask(n_, mask_ & ~(1u << (axis - 1))); }
  MultiIndex complement() const { return from_mask(n_, full_mask(n_) & ~mask_); }

  /// sigma = sum_i (v_i - i), the exponent in the Poincare basis sign rule.
  int sigma() const;

  std::string str() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.n_ == b.n_ && a.mask_ == b.mask_;
  }
  /// Orders by degree, then lexicographically on the ascending axis tuple.
  friend bool operator<(const MultiIndex& a, const MultiIndex& b);

  static std::uint32_t full_mask(int n) {
    return n >= 32 ? ~0u : ((1u << n) - 1u);
  }

 private:
  int n_ = 0;
  std::uint32_t mask_ = 0;
};

/// All basis multi-indices of degree p in dimension n, lexicographic order.
const std::vector<MultiIndex>& basis(int n, int p);

/// Sign of eps^I ^ eps^J relative to eps^{I u J}; 0 when I and J overlap.
int wedge_sign(const MultiIndex& a, const MultiIndex& b);

/// Contracts the basis multivector e_J into the basis form eps^I (or the
/// mirror case) applying i(e_{j1}) first and i(e_{jq}) last. Returns the sign
/// and writes I \ J to `rest`; sign 0 when J is not a subset of I.
int contract_sign(const MultiIndex& inner, const MultiIndex& outer, MultiIndex& rest);

}  // namespace premetric
