#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wct/graph.hpp"
#include "wct/host.hpp"

namespace wct {

inline constexpr std::size_t kDefaultTokenCap = 1'000'000;

/// k-token graph of a base graph. Token vertex i is the k-subset verts[i];
/// subsets are listed in colex order (increasing mask value), so the index of
/// a subset is its colex rank. Adjacency is kept as sorted neighbour lists.
class TokenGraph {
 public:
  const Graph& base() const { return base_; }
  int k() const { return k_; }
  std::size_t size() const { return verts_.size(); }
  Mask subset(std::size_t i) const { return verts_[i]; }
  const std::vector<Mask>& subsets() const { return verts_; }

  /// Index of a k-subset of the base vertices.
  std::size_t index_of(Mask s) const;

  std::span<const int> neighbors(std::size_t i) const {
    return {nbrs_.data() + offsets_[i], nbrs_.data() + offsets_[i + 1]};
  }
  bool adjacent(std::size_t u, std::size_t v) const;
  std::size_t edge_count() const { return nbrs_.size() / 2; }
  std::vector<std::pair<int, int>> edges() const;

  HostGraph host() const;

  friend TokenGraph token_graph(const Graph& g, int k, std::size_t cap);

 private:
  TokenGraph(Graph base, int k) : base_(std::move(base)), k_(k) {}

  Graph base_;
  int k_;
  std::vector<Mask> verts_;
  std::vector<std::size_t> offsets_;
  std::vector<int> nbrs_;
};

/// T_k(g). Accepts 1 <= k <= n; T_n(g) is the single vertex V(g).
/// Throws invalid_argument for k out of range and cap_exceeded when
/// C(n, k) > cap.
TokenGraph token_graph(const Graph& g, int k, std::size_t cap = kDefaultTokenCap);

/// With normalize set, k is replaced by min(k, n - k) before construction
/// (the two token graphs are isomorphic via complementation).
TokenGraph token_graph_normalized(const Graph& g, int k, bool normalize, std::size_t cap = kDefaultTokenCap);

/// u ∩ v for adjacent token vertices u, v. Throws not_adjacent otherwise.
Mask anchor(const TokenGraph& t, std::size_t u, std::size_t v);

/// Checks that S -> V \ S maps T_k(g) onto T_{n-k}(g) preserving adjacency
/// in both directions. Requires 1 <= k <= n - 1.
bool complement_isomorphism_check(const Graph& g, int k, std::size_t cap = kDefaultTokenCap);

struct TokenBipartition {
  /// Token vertices whose intersection with the part R of the base graph
  /// (the side not holding vertex 0) has even size.
  std::vector<int> even;
  std::vector<int> odd;
};

/// Two-colouring of T_k(g) for a connected bipartite base graph. Throws
/// precondition when g is disconnected or not bipartite.
TokenBipartition token_bipartition(const Graph& g, int k, std::size_t cap = kDefaultTokenCap);

/// True when the k-subsets s and t differ by one base edge.
bool token_adjacent(const Graph& g, Mask s, Mask t);

/// Pairwise non-adjacency of a family of k-subsets, checked directly.
bool token_set_independent(const Graph& g, std::span<const Mask> family);

/// Independent, and every other k-subset of V(g) has a neighbour in the
/// family. All members must have size k.
bool token_set_maximal(const Graph& g, int k, std::span<const Mask> family);

/// Text label of a subset, e.g. "1,2,4" with label_base 1.
std::string subset_label(Mask s, int label_base);

/// One "u v" line per token edge, u < v by index, subsets as labels.
std::string token_edge_list(const TokenGraph& t, int label_base);

/// graph6 of the token graph with vertices in index order.
std::string token_graph6(const TokenGraph& t);

}  // namespace wct
