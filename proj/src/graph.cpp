#include "wct/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <string>

#include "wct/error.hpp"

namespace wct {

std::vector<int> bits_to_list(Mask m) {
  std::vector<int> out;
  out.reserve(std::popcount(m));
  for_each_bit(m, [&](int v) { out.push_back(v); });
  return out;
}

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) {
    if (v < 0 || v >= kMaxVertices) throw Error(errc::invalid_argument, "vertex id out of range");
    bits_ |= bit(v);
  }
}

VertexSet VertexSet::from_list(std::span<const int> members) {
  Mask m = 0;
  for (int v : members) {
    if (v < 0 || v >= kMaxVertices) throw Error(errc::invalid_argument, "vertex id out of range");
    m |= bit(v);
  }
  return VertexSet(m);
}

Graph::Graph(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw Error(errc::invalid_argument, "graph order must be in 1..64, got " + std::to_string(n));
  }
  adj_.assign(n, 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

int Graph::edge_count() const {
  int twice = 0;
  for (Mask row : adj_) twice += std::popcount(row);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u) {
    for_each_bit(adj_[u] & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

Mask Graph::neighbors_of(Mask x) const {
  Mask out = 0;
  for_each_bit(x, [&](int v) { out |= adj_[v]; });
  return out;
}

bool Graph::is_independent(Mask x) const {
  for (Mask rest = x; rest != 0; rest &= rest - 1) {
    if (adj_[std::countr_zero(rest)] & x) return false;
  }
  return true;
}

bool Graph::is_clique(Mask x) const {
  for (Mask rest = x; rest != 0; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    if (((adj_[v] | bit(v)) & x) != x) return false;
  }
  return true;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order() || v >= order()) {
    throw Error(errc::invalid_argument, "edge endpoint out of range");
  }
  if (u == v) throw Error(errc::invalid_argument, "loops are not allowed");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr int kGraph6Min = 63;
constexpr int kGraph6Max = 126;

bool graph6_char_ok(char c) {
  int b = static_cast<unsigned char>(c);
  return b >= kGraph6Min && b <= kGraph6Max;
}

}  // namespace

std::string graph6_header(int n) {
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Min));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kGraph6Min));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kGraph6Min));
    out.push_back(static_cast<char>((n & 63) + kGraph6Min));
  }
  return out;
}

std::string graph6_body(const std::vector<bool>& bits) {
  std::string out;
  out.reserve((bits.size() + 5) / 6);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int value = 0;
    for (std::size_t j = 0; j < 6; ++j) {
      value <<= 1;
      if (i + j < bits.size() && bits[i + j]) value |= 1;
    }
    out.push_back(static_cast<char>(value + kGraph6Min));
  }
  return out;
}

std::vector<bool> upper_triangle_bits(const Graph& g) {
  const int n = g.order();
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j));
  }
  return bits;
}

std::string to_graph6(const Graph& g) {
  return graph6_header(g.order()) + graph6_body(upper_triangle_bits(g));
}

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw Error(errc::graph6_malformed_header, "empty graph6 record");
  std::size_t pos = 0;
  long n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') {
      throw Error(errc::graph6_too_many_vertices, "graph6 8-byte header: order exceeds 64");
    }
    if (text.size() < 4) throw Error(errc::graph6_malformed_header, "graph6 header truncated");
    for (std::size_t i = 1; i < 4; ++i) {
      if (!graph6_char_ok(text[i])) {
        throw Error(errc::graph6_bad_character, "graph6 header byte out of range at offset " + std::to_string(i));
      }
      n = (n << 6) | (static_cast<unsigned char>(text[i]) - kGraph6Min);
    }
    if (n < 63) throw Error(errc::graph6_malformed_header, "graph6 long header used for order < 63");
    pos = 4;
  } else {
    if (!graph6_char_ok(text[0])) {
      throw Error(errc::graph6_bad_character, "graph6 header byte out of range");
    }
    n = static_cast<unsigned char>(text[0]) - kGraph6Min;
    pos = 1;
  }
  if (n > kMaxVertices) {
    throw Error(errc::graph6_too_many_vertices, "graph6 order " + std::to_string(n) + " exceeds 64");
  }
  if (n == 0) throw Error(errc::graph6_malformed_header, "graph6 order 0 is not supported");

  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  const std::string_view body = text.substr(pos);
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (!graph6_char_ok(body[i])) {
      throw Error(errc::graph6_bad_character, "graph6 body byte out of range at offset " + std::to_string(pos + i));
    }
  }
  if (body.size() < nbytes) throw Error(errc::graph6_truncated, "graph6 body too short");
  if (body.size() > nbytes) throw Error(errc::graph6_trailing_garbage, "graph6 record has trailing bytes");

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int value = static_cast<unsigned char>(body[k / 6]) - kGraph6Min;
      if ((value >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// subgraphs

InducedSubgraph induced_subgraph(const Graph& g, VertexSet a) {
  const Mask keep = a.bits() & g.vertices();
  if (keep == 0) throw Error(errc::empty_result, "induced subgraph of an empty vertex set");
  if (keep != a.bits()) throw Error(errc::invalid_argument, "vertex set exceeds graph order");
  std::vector<int> map(g.order(), -1);
  int next = 0;
  for_each_bit(keep, [&](int v) { map[v] = next++; });
  Graph h(next);
  for_each_bit(keep, [&](int u) {
    for_each_bit(g.neighbors(u) & keep & ~low_bits(u + 1), [&](int v) { h.add_edge(map[u], map[v]); });
  });
  return {std::move(h), std::move(map)};
}

InducedSubgraph delete_closed_neighborhood(const Graph& g, VertexSet i) {
  if ((i.bits() & ~g.vertices()) != 0) throw Error(errc::invalid_argument, "vertex set exceeds graph order");
  const Mask rest = g.vertices() & ~g.closed_neighbors_of(i.bits());
  if (rest == 0) throw Error(errc::empty_result, "N[I] covers every vertex");
  return induced_subgraph(g, VertexSet(rest));
}

// ---------------------------------------------------------------------------
// structure

bool is_connected(const Graph& g, Mask within) {
  if (within == 0) return true;
  Mask seen = within & (~within + 1);
  Mask frontier = seen;
  while (frontier != 0) {
    const Mask next = g.neighbors_of(frontier) & within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == within;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  Mask left = 0;
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (side[u] == 0) left |= bit(u);
      bool clash = false;
      for_each_bit(g.neighbors(u), [&](int v) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          clash = true;
        }
      });
      if (clash) return std::nullopt;
    }
  }
  return Bipartition{VertexSet(left), VertexSet(g.vertices() & ~left)};
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = -1;
  std::vector<int> dist(n);
  std::vector<int> parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for_each_bit(g.neighbors(u), [&](int v) {
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          const int len = dist[u] + dist[v] + 1;
          if (best == -1 || len < best) best = len;
        }
      });
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

StructuralReport structural_report(const Graph& g) {
  return {is_connected(g), bipartition(g), girth(g)};
}

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.neighbors(v) == 0) return true;
  }
  return false;
}

bool is_complete(const Graph& g) { return g.is_clique(g.vertices()); }

bool is_star(const Graph& g) {
  const int n = g.order();
  if (n < 2 || g.edge_count() != n - 1) return false;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// named graphs

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(errc::invalid_argument, "cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_multipartite_graph(std::span<const int> sizes) {
  if (sizes.empty()) throw Error(errc::invalid_argument, "complete multipartite graph needs parts");
  int n = 0;
  for (int s : sizes) {
    if (s < 1) throw Error(errc::invalid_argument, "part sizes must be positive");
    n += s;
  }
  if (n > kMaxVertices) throw Error(errc::invalid_argument, "total order exceeds 64");
  std::vector<int> part(n);
  int v = 0;
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    for (int i = 0; i < sizes[p]; ++i) part[v++] = static_cast<int>(p);
  }
  Graph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (part[a] != part[b]) g.add_edge(a, b);
    }
  }
  return g;
}

Graph complete_bipartite_graph(int a, int b) {
  const int sizes[] = {a, b};
  return complete_multipartite_graph(sizes);
}

Graph star_graph(int leaves) {
  if (leaves < 1) throw Error(errc::invalid_argument, "star needs at least one leaf");
  return complete_bipartite_graph(1, leaves);
}

Graph petersen_graph() {
  return Graph::from_edges(10, {{1, 2}, {1, 5}, {1, 7}, {2, 3}, {2, 8}, {3, 4}, {3, 9}, {4, 5},
                                {4, 0}, {5, 6}, {6, 8}, {6, 9}, {7, 0}, {7, 9}, {8, 0}});
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "complete_bipartite") return Family::complete_bipartite;
  if (name == "complete_multipartite") return Family::complete_multipartite;
  if (name == "star") return Family::star;
  if (name == "petersen") return Family::petersen;
  return std::nullopt;
}

Graph named_graph(Family family, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(errc::invalid_argument, "wrong number of parameters for named graph");
    }
  };
  switch (family) {
    case Family::path:
      need(1);
      return path_graph(params[0]);
    case Family::cycle:
      need(1);
      return cycle_graph(params[0]);
    case Family::complete:
      need(1);
      return complete_graph(params[0]);
    case Family::complete_bipartite:
      need(2);
      return complete_bipartite_graph(params[0], params[1]);
    case Family::complete_multipartite:
      return complete_multipartite_graph(params);
    case Family::star:
      need(1);
      return star_graph(params[0]);
    case Family::petersen:
      need(0);
      return petersen_graph();
  }
  throw Error(errc::invalid_argument, "unknown graph family");
}

Graph named_graph_from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const auto family = family_from_name(name);
  if (!family) throw Error(errc::invalid_argument, "unknown graph family '" + std::string(name) + "'");
  std::vector<int> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = spec.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view tok = rest.substr(0, comma);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw Error(errc::invalid_argument, "bad named-graph parameter '" + std::string(tok) + "'");
      }
      params.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return named_graph(*family, params);
}

}  // namespace wct
