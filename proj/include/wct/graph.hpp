#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wct {

using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Mask bit(int v) { return Mask{1} << v; }
constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

std::vector<int> bits_to_list(Mask m);

/// A set of vertex ids of some Graph, stored as a bitmask over 0..63.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members);
  static VertexSet from_list(std::span<const int> members);

  constexpr Mask bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int v) const { return (bits_ >> v) & 1U; }
  std::vector<int> members() const { return bits_to_list(bits_); }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }

 private:
  Mask bits_ = 0;
};

/// Simple undirected graph on 1..64 vertices. Row v holds N(v) as a bitmask.
class Graph {
 public:
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  Mask vertices() const { return low_bits(order()); }
  Mask neighbors(int v) const { return adj_[v]; }
  Mask closed_neighbors(int v) const { return adj_[v] | bit(v); }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  /// N(X): union of the neighbourhoods of the members of x.
  Mask neighbors_of(Mask x) const;
  /// N[X] = X ∪ N(X).
  Mask closed_neighbors_of(Mask x) const { return x | neighbors_of(x); }
  bool is_independent(Mask x) const;
  bool is_clique(Mask x) const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Mask> adj_;
};

/// Decode one graph6 record. Throws wct::Error with a graph6.* code.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Header bytes of a graph6 record for an order-n graph (n <= 258047).
std::string graph6_header(int n);
/// Packs upper-triangle bits (column-major, x(0,1), x(0,2), x(1,2), ...) into
/// graph6 body characters.
std::string graph6_body(const std::vector<bool>& bits);

struct InducedSubgraph {
  Graph graph;
  /// old vertex id -> new vertex id, or -1 when the vertex was dropped.
  std::vector<int> index_map;
};

/// G[A]; vertices keep their relative order.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet a);

/// G \ N[I]. Throws errc::empty_result when N[I] covers every vertex.
InducedSubgraph delete_closed_neighborhood(const Graph& g, VertexSet i);

struct Bipartition {
  VertexSet left;
  VertexSet right;
};

struct StructuralReport {
  bool connected = false;
  /// Present iff the graph is bipartite; left holds the lowest vertex of each
  /// component.
  std::optional<Bipartition> bipartition;
  /// Length of a shortest cycle; absent for forests.
  std::optional<int> girth;
};

StructuralReport structural_report(const Graph& g);
bool is_connected(const Graph& g);
bool is_connected(const Graph& g, Mask within);
std::optional<int> girth(const Graph& g);
std::optional<Bipartition> bipartition(const Graph& g);
bool has_isolated_vertex(const Graph& g);
bool is_complete(const Graph& g);
/// K_{1,n-1} with n >= 2 (K_2 counts as a star).
bool is_star(const Graph& g);

enum class Family { path, cycle, complete, complete_bipartite, complete_multipartite, star, petersen };

std::optional<Family> family_from_name(std::string_view name);

/// Standard graphs. Vertex orders:
///   path(n): 0-1-...-(n-1); cycle(n): path plus edge (n-1,0);
///   complete_bipartite(a,b): parts 0..a-1 and a..a+b-1;
///   complete_multipartite(sizes): consecutive blocks;
///   star(a): K_{1,a} with centre 0;
///   petersen(): the labelling 0..9 of the usual figure with outer cycle
///   1-2-3-4-5 through hub edges (edges 12 15 17 23 28 34 39 45 40 56 68 69
///   70 79 80).
Graph named_graph(Family family, std::span<const int> params);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph complete_multipartite_graph(std::span<const int> sizes);
Graph star_graph(int leaves);
Graph petersen_graph();

/// Parses "petersen", "cycle:5", "complete_bipartite:3,3", ...
Graph named_graph_from_spec(std::string_view spec);

/// Upper-triangle edge test used by graph6 and canonical forms.
std::vector<bool> upper_triangle_bits(const Graph& g);

}  // namespace wct
