#include "premetric/multi_index.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace premetric {

namespace {

void check_dim(int n) {
  if (n < 0 || n > MultiIndex::kMaxDim) {
    throw ContractViolation("dimension " + std::to_string(n) + " out of range");
  }
}

}  // namespace

MultiIndex::MultiIndex(int n, std::initializer_list<int> axes)
    : MultiIndex(n, std::vector<int>(axes)) {}

MultiIndex::MultiIndex(int n, const std::vector<int>& axes) : n_(n) {
  check_dim(n);
  int prev = 0;
  for (int a : axes) {
    if (a <= prev || a > n) {
      throw ContractViolation("multi-index axes must be strictly increasing in [1.." +
                              std::to_string(n) + "]");
    }
    mask_ |= 1u << (a - 1);
    prev = a;
  }
}

MultiIndex MultiIndex::from_mask(int n, std::uint32_t mask) {
  check_dim(n);
  if ((mask & ~full_mask(n)) != 0) {
    throw ContractViolation("multi-index mask exceeds dimension");
  }
  MultiIndex m;
  m.n_ = n;
  m.mask_ = mask;
  return m;
}

std::vector<int> MultiIndex::axes() const {
  std::vector<int> out;
  out.reserve(degree());
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

int MultiIndex::sigma() const {
  int s = 0;
  int i = 1;
  for (int v : axes()) s += v - i++;
  return s;
}

std::string MultiIndex::str() const {
  std::string s = "{";
  bool first = true;
  for (int a : axes()) {
    if (!first) s += ",";
    s += std::to_string(a);
    first = false;
  }
  return s + "}";
}

bool operator<(const MultiIndex& a, const MultiIndex& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  const std::uint32_t diff = a.mask_ ^ b.mask_;
  if (diff == 0) return false;
  // The smallest axis in exactly one of the two sets decides the first
  // differing tuple position.
  const std::uint32_t lowest = diff & (~diff + 1u);
  return (a.mask_ & lowest) != 0;
}

const std::vector<MultiIndex>& basis(int n, int p) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<MultiIndex>> cache;
  check_dim(n);
  if (p < 0 || p > n) throw ContractViolation("basis degree out of range");
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.try_emplace({n, p});
  if (inserted) {
    std::vector<MultiIndex>& out = it->second;
    // Enumerate p-subsets lexicographically by advancing the rightmost axis.
    std::vector<int> axes(p);
    for (int i = 0; i < p; ++i) axes[i] = i + 1;
    while (true) {
      out.emplace_back(n, axes);
      int i = p - 1;
      while (i >= 0 && axes[i] == n - p + i + 1) --i;
      if (i < 0) break;
      ++axes[i];
      for (int j = i + 1; j < p; ++j) axes[j] = axes[j - 1] + 1;
    }
  }
  return it->second;
}

int wedge_sign(const MultiIndex& a, const MultiIndex& b) {
  if ((a.mask() & b.mask()) != 0) return 0;
  // Count inversions: pairs (i in a, j in b) with i > j.
  int inversions = 0;
  for (int j : b.axes()) {
    inversions += std::popcount(a.mask() & ~((1u << j) - 1u));
  }
  return (inversions & 1) ? -1 : 1;
}

int contract_sign(const MultiIndex& inner, const MultiIndex& outer, MultiIndex& rest) {
  if ((inner.mask() & ~outer.mask()) != 0) return 0;
  MultiIndex cur = outer;
  int sign = 1;
  for (int j : inner.axes()) {
    if (cur.position(j) & 1) sign = -sign;
    cur = cur.without(j);
  }
  rest = cur;
  return sign;
}

}  // namespace premetric
