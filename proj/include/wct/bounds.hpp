#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "wct/constructions.hpp"
#include "wct/graph.hpp"

namespace wct {

/// floor(C(n, k-1) * α(g) / k). Throws precondition when g has an isolated
/// vertex, invalid_argument unless 1 <= k <= n/2.
std::uint64_t qbound_upper(const Graph& g, int k);

/// C(α(g), k).
std::uint64_t binom_lower(const Graph& g, int k);

/// C(α, 2) + floor((n - α) / 2), a lower bound on α(T_2(g)). Throws
/// precondition on stars.
std::uint64_t dmsa_lower(const Graph& g);

/// Every filter below returns false only when T_2(g) (or T_k(g) for
/// bipartite_exclusion) is certainly not well-covered.

struct PathConditionResult {
  bool ok = true;
  /// Induced path x1-x2-x3 with no vertex on a triangle and no common
  /// neighbour of x1, x3 besides x2.
  std::optional<std::array<int, 3>> witness;
};

/// Needs g connected with n >= 3 (precondition otherwise).
PathConditionResult path_condition(const Graph& g);
inline bool path_condition_filter(const Graph& g) { return path_condition(g).ok; }

/// Girth exists and is at most 4. Needs g connected with n >= 3.
bool girth_filter(const Graph& g);

/// α(g) <= floor((n - 1 + sqrt(n - 1)) / 2). Needs g connected with n >= 3.
bool alpha_filter(const Graph& g);

/// floor((1 + 2b + sqrt(8b + 1)) / 2), the largest size an odd part may have
/// when the next part has b vertices.
std::uint64_t odd_part_limit(std::uint64_t b);

struct PartsCheck {
  bool ok = true;
  /// 0-based index of the first odd part V_{2i-1} that fails.
  std::optional<int> failing_part;
  std::string reason;
};

/// Checks |φ(V_{2i-1}, V_{2i})| <= 1 and |V_{2i-1}| <= odd_part_limit(|V_{2i}|)
/// for each consecutive pair of a maximum-greedy partition.
PartsCheck parts_condition(const Graph& g, const IndependentPartition& p);

/// parts_condition on greedy_partition(g, maximum). Needs g connected.
bool parts_bound_filter(const Graph& g);

/// parts_condition on every maximum-greedy partition (n <= 8); false as soon
/// as one partition fails.
bool parts_bound_filter_all(const Graph& g);

/// k is first folded to min(k, n - k). Folded k = 0 gives true, folded
/// k = 1 gives whether g is well-covered, and a bipartite g with folded
/// k >= 2 gives false. Needs g connected and 1 <= k <= n.
bool bipartite_exclusion(const Graph& g, int k);

struct BoundsReport {
  int n = 0;
  int k = 0;
  int alpha_base = 0;
  std::optional<std::uint64_t> upper_qbound;
  std::uint64_t lower_binom = 0;
  /// k = 2 and g not a star.
  std::optional<std::uint64_t> lower_dmsa;
  /// Keys carry the token size they speak about, e.g. "k2.girth_ok".
  std::map<std::string, bool> filters;
};

/// Every bound and filter whose preconditions hold for (g, k).
BoundsReport bounds_report(const Graph& g, int k);

}  // namespace wct
