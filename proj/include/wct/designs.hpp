#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wct/constructions.hpp"
#include "wct/graph.hpp"

namespace wct {

/// t-(v, k, λ) design on points 0..v-1. Blocks are k-subsets as masks,
/// kept in colex (ascending mask) order.
struct DesignCertificate {
  int v = 0;
  int k = 0;
  int t = 0;
  std::uint64_t lambda = 0;
  std::vector<Mask> blocks;
};

struct DesignCheck {
  bool valid = false;
  /// First t-subset (colex order) whose block count differs from λ.
  std::optional<Mask> violating;
  std::uint64_t violating_count = 0;
  std::string reason;
};

/// Exhaustive t-subset scan. Throws malformed unless 0 <= t <= k <= v <= 64
/// and every block is a k-subset of the points.
DesignCheck verify_design(const DesignCertificate& c);

/// k * |s| == C(n, k-1) * α(g): the upper bound holds with equality before
/// flooring.
bool qbound_attained_exactly(const Graph& g, int k, std::uint64_t token_alpha);

/// Reads an extremal independent set of T_k(g) as a (k-1)-(n, k, α(g))
/// design whose blocks are the members of s. Throws bound_not_attained when
/// |s| misses the exact bound, not_independent when s is not independent,
/// and invariant_violation if the design check fails.
DesignCertificate extract_design_from_equality(const Graph& g, int k, const TokenSet& s);

/// Largest C(n, k) the exact-cover search accepts.
inline constexpr std::uint64_t kExactCoverBudget = 84;

/// A (k-1)-(n, k, 1) design found by exact cover of the (k-1)-subsets, or
/// nothing when none exists. Columns are taken fewest-candidates first,
/// lowest index on ties, so the result is reproducible. The answer is
/// cross-checked against α(T_k(K_n)). Throws invalid_argument unless
/// 1 <= k <= n/2 and cap_exceeded beyond the budget.
std::optional<DesignCertificate> johnson_equality(int n, int k);

struct PartialSteinerCheck {
  bool independent = false;
  bool maximal = false;
  bool maximum = false;
};

/// Flags of a family of equal-size blocks as a vertex set of T_k(K_n).
/// Throws malformed for empty, mixed-size or out-of-range blocks.
PartialSteinerCheck maximal_partial_steiner_check(int n, const std::vector<Mask>& blocks);

}  // namespace wct
