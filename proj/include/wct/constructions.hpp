#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wct/graph.hpp"

namespace wct {

/// A family of token vertices (k-subsets as masks), sorted ascending.
using TokenSet = std::vector<Mask>;
using Edge = std::pair<int, int>;

/// φ(A, B): members x of A with B ∪ {x} independent. Throws
/// overlapping_parts or not_independent when A, B are not disjoint
/// independent sets.
VertexSet phi(const Graph& g, VertexSet a, VertexSet b);

struct PhiViolation {
  int later;    ///< index j of the later part
  int earlier;  ///< index i < j
  int vertex;   ///< a member of φ(V_j, V_i)
};

/// Ordered partition of V(g) into independent parts. The flags are computed
/// on construction.
class IndependentPartition {
 public:
  /// Throws not_independent, overlapping_parts or invalid_argument (empty
  /// part, or parts not covering V(g)).
  IndependentPartition(const Graph& g, std::vector<VertexSet> parts);

  const std::vector<VertexSet>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  /// φ(V_j, V_i) = ∅ for all j > i.
  bool phi_cascade() const { return !violation_.has_value(); }
  /// Each V_i is a maximum independent set of g minus the earlier parts.
  bool maximum_greedy() const { return maximum_greedy_; }
  /// First (j, i) in row-major order with φ(V_j, V_i) ≠ ∅.
  const std::optional<PhiViolation>& first_violation() const { return violation_; }

 private:
  std::vector<VertexSet> parts_;
  std::optional<PhiViolation> violation_;
  bool maximum_greedy_ = false;
};

/// V_1 V_2 ⋯ V_k: k-subsets {x_1..x_k} with x_i ∈ V_i, all distinct. Parts
/// must be independent and pairwise equal or disjoint. The result is checked
/// independent in T_k(g).
TokenSet product_set(const Graph& g, const std::vector<VertexSet>& sets);

/// ∏ C(|U|, multiplicity of U) over the distinct parts U.
std::uint64_t product_cardinality(const std::vector<VertexSet>& sets);

/// V_1V_2 ∪ V_3V_4 ∪ ⋯ (∪ V_rV_r when r is odd) in T_2(g), for disjoint
/// independent sets. Checked independent.
TokenSet pairing_independent_set(const Graph& g, const std::vector<VertexSet>& sets);

/// Paired products plus φφ terms for consecutive pairs, and V_rV_r when r
/// is odd. Needs phi_cascade (else errc::phi_cascade naming the first
/// offending parts). The result is checked maximal independent in T_2(g).
TokenSet maximal_from_partition(const Graph& g, const IndependentPartition& p);

/// Edges of g usable next to the partition: isolated in G[V_i ∪ V_j].
bool edge_isolated_between_parts(const Graph& g, const IndependentPartition& p, Edge e);

/// Greedy completion: scan E(g) in lexicographic order and keep each edge
/// that is isolated between its parts and forms no triangle with a kept edge
/// sharing an endpoint.
std::vector<Edge> greedy_part_edges(const Graph& g, const IndependentPartition& p);

/// V_1V_1 ∪ ⋯ ∪ V_rV_r ∪ E in T_2(g). When `edges` is absent the greedy
/// completion is used. Throws phi_cascade, edge_condition (an edge breaks a
/// condition) or not_maximal (another edge could be added). The result is
/// checked maximal independent.
TokenSet maximal_from_coloring_edges(const Graph& g, const IndependentPartition& p,
                                     const std::optional<std::vector<Edge>>& edges = std::nullopt);

enum class GreedyMode { maximum, maximal };

/// Repeatedly removes the lexicographically least maximum (or maximal)
/// independent set of what is left.
IndependentPartition greedy_partition(const Graph& g, GreedyMode mode);

/// Lexicographically least maximum independent set of g[within].
VertexSet least_maximum_independent_set(const Graph& g, Mask within);

/// Every partition whose parts are, in order, maximum independent sets of
/// the remainder. Only for n <= 10.
std::vector<IndependentPartition> all_maximum_greedy_partitions(const Graph& g);

struct EdgeSetResult {
  TokenSet set;
  bool maximal = false;
};

/// Experimental: for a triangle-free graph, E(g) read as 2-subsets is
/// independent in T_2(g); maximality is checked by scan. Throws precondition
/// when g has a triangle.
EdgeSetResult edge_set_independent_set(const Graph& g);

/// Recorded recipe for a mixed construction: products U U' for each listed
/// pair plus a set of edges.
struct HybridRecipe {
  std::vector<std::pair<VertexSet, VertexSet>> products;
  std::vector<Edge> edges;
};

/// Union of the recipe's products and edges, checked independent in T_2(g).
TokenSet hybrid_independent_set(const Graph& g, const HybridRecipe& recipe);

/// The size-16 recipe on the Petersen graph (figure labels 0..9).
HybridRecipe petersen_hybrid_recipe();

}  // namespace wct
