#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wct/graph.hpp"
#include "wct/host.hpp"

namespace wct {

/// Sorted vertex indices of a host graph.
using IndependentSet = std::vector<int>;

/// Calls visit once per maximal independent set (members ascending). Stops as
/// soon as visit returns false. Branches follow a pivot u of P ∪ X
/// minimising |P ∩ N[u]|, lowest index on ties, so the order is fixed.
void for_each_maximal_independent_set(const HostGraph& g, const std::function<bool(const IndependentSet&)>& visit);

std::vector<IndependentSet> maximal_independent_sets(const HostGraph& g);
inline std::vector<IndependentSet> maximal_independent_sets(const Graph& g) {
  return maximal_independent_sets(HostGraph::from_graph(g));
}

struct AlphaResult {
  int alpha = 0;
  IndependentSet witness;
};

/// Exact α. Hosts below 20 vertices use full enumeration (lexicographically
/// least maximum set); larger ones use branch and bound with a greedy clique
/// cover bound.
AlphaResult independence_number(const HostGraph& g);
inline AlphaResult independence_number(const Graph& g) { return independence_number(HostGraph::from_graph(g)); }

/// α(g[within]) for a base graph, by branching on the closed neighbourhood
/// of a minimum-degree vertex.
int independence_number_within(const Graph& g, Mask within);

struct WellCoveredReport {
  std::string host;  ///< graph6 of the host
  bool verdict = false;
  int min_maximal = 0;
  int max_maximal = 0;
  IndependentSet witness_small;
  IndependentSet witness_large;
  bool enumeration_complete = false;
};

/// With early_exit, enumeration stops at the first maximal set whose size
/// differs from an earlier one. Witnesses are the lexicographically least
/// sets seen at the smallest and largest sizes.
WellCoveredReport is_well_covered(const HostGraph& g, bool early_exit);
inline WellCoveredReport is_well_covered(const Graph& g, bool early_exit) {
  return is_well_covered(HostGraph::from_graph(g), early_exit);
}

/// Fast yes/no check (early exit, no report).
bool well_covered(const HostGraph& g);
inline bool well_covered(const Graph& g) { return well_covered(HostGraph::from_graph(g)); }

enum class Implication { g_not_well_covered, inconclusive };

struct Reduction {
  HostGraph reduced;
  /// reduced vertex -> host vertex
  std::vector<int> origin;
  Implication implication = Implication::inconclusive;
};

/// Removes N[i] for an independent, non-maximal i and tests the rest. A
/// non-well-covered remainder means the host is not well-covered either.
/// Throws not_independent or already_maximal.
Reduction reduce_and_test(const HostGraph& g, const IndependentSet& i);

std::string implication_name(Implication v);

}  // namespace wct
