#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "wct/graph.hpp"

namespace wct {

/// C(n, k), saturating at UINT64_MAX. Zero when k < 0 or k > n.
constexpr std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

/// floor(sqrt(x)) exactly.
constexpr std::uint64_t isqrt(std::uint64_t x) {
  std::uint64_t lo = 0, hi = 1ULL << 32;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (mid * mid <= x) lo = mid; else hi = mid;
  }
  return lo;
}

/// Next mask with the same popcount (Gosper).
constexpr Mask next_same_popcount(Mask x) {
  const Mask c = x & (~x + 1);
  const Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

/// All k-subsets of {0..n-1} in colex order (= increasing mask value).
std::vector<Mask> k_subsets(int n, int k);

/// Position of `s` in colex order among subsets of the same size.
std::uint64_t colex_rank(Mask s);

}  // namespace wct
