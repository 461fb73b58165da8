#include "wct/canon.hpp"

#include <algorithm>
#include <array>
#include <thread>
#include <unordered_set>

#include "wct/error.hpp"

namespace wct {

namespace {

using Key = unsigned __int128;

struct Small {
  int n = 0;
  std::array<Mask, kCanonMaxOrder> adj{};
};

struct KeyHash {
  std::size_t operator()(Key k) const noexcept {
    const auto lo = static_cast<std::uint64_t>(k);
    const auto hi = static_cast<std::uint64_t>(k >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9E3779B97F4A7C15ULL));
  }
};

// Ordered partition: cells[0..count) are vertex masks in order.
struct Partition {
  std::array<Mask, kCanonMaxOrder> cells{};
  int count = 0;
};

// Splits `cell_index` by neighbour counts into `splitter`; returns true when
// the cell was actually split. Fragments are ordered by increasing count.
bool split_cell(const Small& g, Partition& p, int cell_index, Mask splitter) {
  const Mask cell = p.cells[cell_index];
  if (std::popcount(cell) < 2) return false;
  std::array<Mask, kCanonMaxOrder + 1> by_count{};
  Mask used_counts = 0;
  for_each_bit(cell, [&](int v) {
    const int c = std::popcount(g.adj[v] & splitter);
    by_count[c] |= bit(v);
    used_counts |= bit(c);
  });
  if (std::popcount(used_counts) < 2) return false;
  const int extra = std::popcount(used_counts) - 1;
  for (int i = p.count - 1; i > cell_index; --i) p.cells[i + extra] = p.cells[i];
  int at = cell_index;
  for_each_bit(used_counts, [&](int c) { p.cells[at++] = by_count[c]; });
  p.count += extra;
  return true;
}

void refine(const Small& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < p.count && !changed; ++s) {
      const Mask splitter = p.cells[s];
      for (int c = 0; c < p.count; ++c) {
        if (split_cell(g, p, c, splitter)) changed = true;
      }
    }
  }
}

Key leaf_key(const Small& g, const Partition& p, std::array<int, kCanonMaxOrder>& pos) {
  for (int i = 0; i < p.count; ++i) pos[std::countr_zero(p.cells[i])] = i;
  std::array<Mask, kCanonMaxOrder> rel{};
  for (int v = 0; v < g.n; ++v) {
    Mask row = 0;
    for_each_bit(g.adj[v], [&](int w) { row |= bit(pos[w]); });
    rel[pos[v]] = row;
  }
  Key key = 0;
  int k = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((rel[j] >> i) & 1U) key |= Key{1} << (127 - k);
    }
  }
  return key;
}

bool twins(const Small& g, int u, int w) {
  return (g.adj[u] & ~bit(w)) == (g.adj[w] & ~bit(u));
}

struct Search {
  const Small& g;
  bool have = false;
  Key best = 0;
  std::array<int, kCanonMaxOrder> best_pos{};
  std::array<int, kCanonMaxOrder> scratch{};

  void run(Partition p) {
    refine(g, p);
    if (p.count == g.n) {
      const Key key = leaf_key(g, p, scratch);
      if (!have || key > best) {
        have = true;
        best = key;
        best_pos = scratch;
      }
      return;
    }
    int target = -1;
    for (int i = 0; i < p.count; ++i) {
      const int size = std::popcount(p.cells[i]);
      if (size > 1 && (target == -1 || size < std::popcount(p.cells[target]))) target = i;
    }
    const Mask cell = p.cells[target];
    Mask reps = 0;
    for_each_bit(cell, [&](int v) {
      bool fresh = true;
      for_each_bit(reps, [&](int r) { fresh = fresh && !twins(g, r, v); });
      if (fresh) reps |= bit(v);
    });
    for_each_bit(reps, [&](int v) {
      Partition child = p;
      for (int i = child.count - 1; i > target; --i) child.cells[i + 1] = child.cells[i];
      child.cells[target] = bit(v);
      child.cells[target + 1] = cell & ~bit(v);
      ++child.count;
      run(child);
    });
  }
};

Small to_small(const Graph& g) {
  if (g.order() > kCanonMaxOrder) {
    throw Error(errc::cap_exceeded, "canonical labelling supports order <= 16");
  }
  Small s;
  s.n = g.order();
  for (int v = 0; v < s.n; ++v) s.adj[v] = g.neighbors(v);
  return s;
}

struct SmallCanon {
  Key key = 0;
  std::array<int, kCanonMaxOrder> pos{};
};

SmallCanon canon_small(const Small& g) {
  Search search{g};
  Partition root;
  root.count = 1;
  root.cells[0] = low_bits(g.n);
  search.run(root);
  return {search.best, search.best_pos};
}

Small relabel(const Small& g, const std::array<int, kCanonMaxOrder>& pos) {
  Small out;
  out.n = g.n;
  for (int v = 0; v < g.n; ++v) {
    Mask row = 0;
    for_each_bit(g.adj[v], [&](int w) { row |= bit(pos[w]); });
    out.adj[pos[v]] = row;
  }
  return out;
}

Small delete_vertex(const Small& g, int v) {
  Small out;
  out.n = g.n - 1;
  const Mask below = low_bits(v);
  for (int u = 0, w = 0; u < g.n; ++u) {
    if (u == v) continue;
    const Mask row = g.adj[u];
    out.adj[w++] = (row & below) | ((row >> 1) & ~below);
  }
  return out;
}

bool small_connected(const Small& g, Mask within) {
  if (within == 0) return true;
  Mask seen = within & (~within + 1);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.adj[v]; });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == within;
}

Graph to_graph(const Small& s) {
  Graph g(s.n);
  for (int v = 0; v < s.n; ++v) {
    for_each_bit(s.adj[v] & ~low_bits(v + 1), [&](int w) { g.add_edge(v, w); });
  }
  return g;
}

// Children of one canonical parent that pass the canonical-deletion test.
std::vector<Small> children_of(const Small& parent, bool connected_only) {
  const int n = parent.n + 1;
  const Key parent_key = canon_small(parent).key;
  std::vector<Small> out;
  std::unordered_set<Key, KeyHash> seen;
  const Mask first = connected_only ? 1 : 0;
  for (Mask nbrs = first; nbrs < bit(parent.n); ++nbrs) {
    Small child;
    child.n = n;
    for (int v = 0; v < parent.n; ++v) child.adj[v] = parent.adj[v] | (((nbrs >> v) & 1U) << parent.n);
    child.adj[parent.n] = nbrs;

    const SmallCanon c = canon_small(child);
    // Canonical deletion vertex: the eligible vertex with the largest
    // canonical position. Eligible = non-cut when generating connected graphs.
    int chosen = -1;
    int chosen_pos = -1;
    for (int v = 0; v < n; ++v) {
      if (c.pos[v] <= chosen_pos) continue;
      if (connected_only && !small_connected(child, low_bits(n) & ~bit(v))) continue;
      chosen = v;
      chosen_pos = c.pos[v];
    }
    const int added = parent.n;
    if (chosen != added) {
      if (std::popcount(child.adj[chosen]) != std::popcount(nbrs)) continue;
      if (canon_small(delete_vertex(child, chosen)).key != parent_key) continue;
    }
    if (!seen.insert(c.key).second) continue;
    out.push_back(relabel(child, c.pos));
  }
  return out;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  const Small s = to_small(g);
  const SmallCanon c = canon_small(s);
  CanonicalLabeling out{to_graph(relabel(s, c.pos)), std::vector<int>(c.pos.begin(), c.pos.begin() + s.n)};
  return out;
}

std::string canonical_form(const Graph& g) { return to_graph6(canonical_labeling(g).graph); }

std::vector<Graph> enumerate_graphs(int n, bool connected_only, int jobs) {
  if (n < 1 || n > kEnumerateMaxOrder) {
    throw Error(errc::invalid_argument, "enumeration order must be in 1.." + std::to_string(kEnumerateMaxOrder));
  }
  jobs = std::max(1, jobs);
  std::vector<Small> level(1);
  level[0].n = 1;
  for (int order = 2; order <= n; ++order) {
    std::vector<std::vector<Small>> per_parent(level.size());
    auto work = [&](std::size_t begin, std::size_t step) {
      for (std::size_t i = begin; i < level.size(); i += step) per_parent[i] = children_of(level[i], connected_only);
    };
    if (jobs == 1 || level.size() < 64) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(work, static_cast<std::size_t>(t), static_cast<std::size_t>(jobs));
      for (auto& th : pool) th.join();
    }
    std::vector<Small> next;
    for (auto& kids : per_parent) next.insert(next.end(), kids.begin(), kids.end());
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (const Small& s : level) out.push_back(to_graph(s));
  return out;
}

}  // namespace wct
