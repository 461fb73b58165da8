#include "wct/token.hpp"

#include <algorithm>

#include "wct/combinatorics.hpp"
#include "wct/error.hpp"

namespace wct {

std::size_t TokenGraph::index_of(Mask s) const {
  if (std::popcount(s) != k_ || (s & ~base_.vertices()) != 0) {
    throw Error(errc::invalid_argument, "not a " + std::to_string(k_) + "-subset of the base vertices");
  }
  return static_cast<std::size_t>(colex_rank(s));
}

bool TokenGraph::adjacent(std::size_t u, std::size_t v) const {
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), static_cast<int>(v));
}

std::vector<std::pair<int, int>> TokenGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count());
  for (std::size_t u = 0; u < size(); ++u) {
    for (int v : neighbors(u)) {
      if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<int>(u), v);
    }
  }
  return out;
}

HostGraph TokenGraph::host() const {
  HostGraph h(static_cast<int>(size()));
  for (auto [u, v] : edges()) h.add_edge(u, v);
  return h;
}

TokenGraph token_graph(const Graph& g, int k, std::size_t cap) {
  const int n = g.order();
  if (k < 1 || k > n) {
    throw Error(errc::invalid_argument, "token size k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  const std::uint64_t count = binomial(n, k);
  if (count > cap) {
    throw Error(errc::cap_exceeded,
                "C(" + std::to_string(n) + "," + std::to_string(k) + ") token vertices exceed cap " + std::to_string(cap));
  }
  TokenGraph t(g, k);
  t.verts_ = k_subsets(n, k);
  t.offsets_.reserve(t.verts_.size() + 1);
  t.offsets_.push_back(0);
  std::vector<int> row;
  for (Mask s : t.verts_) {
    row.clear();
    for_each_bit(s, [&](int a) {
      for_each_bit(g.neighbors(a) & ~s, [&](int b) {
        row.push_back(static_cast<int>(colex_rank((s & ~bit(a)) | bit(b))));
      });
    });
    std::sort(row.begin(), row.end());
    t.nbrs_.insert(t.nbrs_.end(), row.begin(), row.end());
    t.offsets_.push_back(t.nbrs_.size());
  }
  return t;
}

TokenGraph token_graph_normalized(const Graph& g, int k, bool normalize, std::size_t cap) {
  if (normalize && k >= 1 && k < g.order()) k = std::min(k, g.order() - k);
  return token_graph(g, k, cap);
}

Mask anchor(const TokenGraph& t, std::size_t u, std::size_t v) {
  if (u >= t.size() || v >= t.size() || !t.adjacent(u, v)) {
    throw Error(errc::not_adjacent, "token vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                        " are not adjacent");
  }
  return t.subset(u) & t.subset(v);
}

bool complement_isomorphism_check(const Graph& g, int k, std::size_t cap) {
  const int n = g.order();
  if (k < 1 || k > n - 1) {
    throw Error(errc::invalid_argument, "complement check needs 1 <= k <= n-1");
  }
  const TokenGraph a = token_graph(g, k, cap);
  const TokenGraph b = k == n - k ? a : token_graph(g, n - k, cap);
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  const Mask all = g.vertices();
  std::vector<int> image(a.size());
  std::vector<bool> hit(b.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t j = b.index_of(all & ~a.subset(i));
    if (hit[j]) return false;
    hit[j] = true;
    image[i] = static_cast<int>(j);
  }
  // Same edge count plus every edge mapped onto an edge gives a bijection on edges.
  for (auto [u, v] : a.edges()) {
    if (!b.adjacent(image[u], image[v])) return false;
  }
  return true;
}

TokenBipartition token_bipartition(const Graph& g, int k, std::size_t cap) {
  if (!is_connected(g)) throw Error(errc::precondition, "token bipartition needs a connected base graph");
  const auto parts = bipartition(g);
  if (!parts) throw Error(errc::precondition, "token bipartition needs a bipartite base graph");
  const Mask r = parts->right.bits();
  const TokenGraph t = token_graph(g, k, cap);
  TokenBipartition out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    (std::popcount(t.subset(i) & r) % 2 == 0 ? out.even : out.odd).push_back(static_cast<int>(i));
  }
  return out;
}

bool token_adjacent(const Graph& g, Mask s, Mask t) {
  const Mask diff = s ^ t;
  if (std::popcount(diff) != 2 || std::popcount(s & diff) != 1) return false;
  const int a = std::countr_zero(diff);
  const int b = 63 - std::countl_zero(diff);
  return g.adjacent(a, b);
}

namespace {

template <class F>
bool any_token_neighbor(const Graph& g, Mask s, F&& pred) {
  bool hit = false;
  for_each_bit(s, [&](int a) {
    for_each_bit(g.neighbors(a) & ~s, [&](int b) {
      if (!hit && pred((s & ~bit(a)) | bit(b))) hit = true;
    });
  });
  return hit;
}

}  // namespace

bool token_set_independent(const Graph& g, std::span<const Mask> family) {
  std::vector<Mask> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  auto member = [&](Mask m) { return std::binary_search(sorted.begin(), sorted.end(), m); };
  for (Mask s : sorted) {
    if (any_token_neighbor(g, s, member)) return false;
  }
  return true;
}

bool token_set_maximal(const Graph& g, int k, std::span<const Mask> family) {
  for (Mask s : family) {
    if (std::popcount(s) != k || (s & ~g.vertices()) != 0) return false;
  }
  if (!token_set_independent(g, family)) return false;
  std::vector<Mask> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  auto member = [&](Mask m) { return std::binary_search(sorted.begin(), sorted.end(), m); };
  for (Mask s : k_subsets(g.order(), k)) {
    if (!member(s) && !any_token_neighbor(g, s, member)) return false;
  }
  return true;
}

std::string subset_label(Mask s, int label_base) {
  std::string out;
  for_each_bit(s, [&](int v) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(v + label_base);
  });
  return out;
}

std::string token_edge_list(const TokenGraph& t, int label_base) {
  std::string out;
  for (auto [u, v] : t.edges()) {
    out += subset_label(t.subset(u), label_base);
    out.push_back(' ');
    out += subset_label(t.subset(v), label_base);
    out.push_back('\n');
  }
  return out;
}

std::string token_graph6(const TokenGraph& t) {
  const std::size_t n = t.size();
  if (n > 258047) throw Error(errc::cap_exceeded, "token graph too large for graph6");
  std::vector<bool> bits;
  bits.reserve(n * (n - 1) / 2);
  for (std::size_t j = 1; j < n; ++j) {
    auto row = t.neighbors(j);
    for (std::size_t i = 0; i < j; ++i) bits.push_back(std::binary_search(row.begin(), row.end(), static_cast<int>(i)));
  }
  return graph6_header(static_cast<int>(n)) + graph6_body(bits);
}

}  // namespace wct
