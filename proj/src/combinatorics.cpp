#include "wct/combinatorics.hpp"

namespace wct {

std::vector<Mask> k_subsets(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  out.reserve(binomial(n, k));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  const Mask limit = low_bits(n);
  for (Mask s = low_bits(k);; s = next_same_popcount(s)) {
    out.push_back(s);
    if (s == (limit & ~low_bits(n - k))) break;
  }
  return out;
}

std::uint64_t colex_rank(Mask s) {
  std::uint64_t r = 0;
  int i = 1;
  for_each_bit(s, [&](int c) { r += binomial(c, i++); });
  return r;
}

}  // namespace wct
