#include "wct/bounds.hpp"

#include "wct/combinatorics.hpp"
#include "wct/error.hpp"
#include "wct/independence.hpp"

namespace wct {

namespace {

void require_connected_order3(const Graph& g, const char* what) {
  if (g.order() < 3) throw Error(errc::precondition, std::string(what) + " needs at least 3 vertices");
  if (!is_connected(g)) throw Error(errc::precondition, std::string(what) + " needs a connected graph");
}

bool on_triangle(const Graph& g, int v) { return !g.is_independent(g.neighbors(v)); }

}  // namespace

std::uint64_t qbound_upper(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1 || k > n / 2) throw Error(errc::invalid_argument, "k must satisfy 1 <= k <= n/2");
  if (has_isolated_vertex(g)) throw Error(errc::precondition, "graph has an isolated vertex");
  const auto alpha = static_cast<std::uint64_t>(independence_number(g).alpha);
  return binomial(n, k - 1) * alpha / static_cast<std::uint64_t>(k);
}

std::uint64_t binom_lower(const Graph& g, int k) { return binomial(independence_number(g).alpha, k); }

std::uint64_t dmsa_lower(const Graph& g) {
  if (is_star(g)) throw Error(errc::precondition, "graph is a star");
  const int alpha = independence_number(g).alpha;
  return binomial(alpha, 2) + static_cast<std::uint64_t>((g.order() - alpha) / 2);
}

PathConditionResult path_condition(const Graph& g) {
  require_connected_order3(g, "path condition");
  const int n = g.order();
  std::vector<bool> tri(n);
  for (int v = 0; v < n; ++v) tri[v] = on_triangle(g, v);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      const Mask common = g.neighbors(a) & g.neighbors(b);
      if (std::popcount(common) != 1) continue;  // two common neighbours close a 4-cycle
      const int mid = std::countr_zero(common);
      if (!tri[a] && !tri[mid] && !tri[b]) return {false, std::array<int, 3>{a, mid, b}};
    }
  }
  return {};
}

bool girth_filter(const Graph& g) {
  require_connected_order3(g, "girth filter");
  const auto gi = girth(g);
  return gi.has_value() && *gi <= 4;
}

bool alpha_filter(const Graph& g) {
  require_connected_order3(g, "alpha filter");
  const auto m = static_cast<std::uint64_t>(g.order() - 1);
  const auto alpha = static_cast<std::uint64_t>(independence_number(g).alpha);
  return alpha <= (m + isqrt(m)) / 2;
}

std::uint64_t odd_part_limit(std::uint64_t b) { return (1 + 2 * b + isqrt(8 * b + 1)) / 2; }

PartsCheck parts_condition(const Graph& g, const IndependentPartition& p) {
  const auto& parts = p.parts();
  for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
    const int idx = static_cast<int>(i);
    if (phi(g, parts[i], parts[i + 1]).size() > 1) {
      return {false, idx, "phi of part " + std::to_string(idx + 1) + " into the next has more than one vertex"};
    }
    const auto odd = static_cast<std::uint64_t>(parts[i].size());
    const auto even = static_cast<std::uint64_t>(parts[i + 1].size());
    if (odd > odd_part_limit(even)) {
      return {false, idx, "part " + std::to_string(idx + 1) + " is too large for the next part"};
    }
  }
  return {};
}

bool parts_bound_filter(const Graph& g) {
  if (!is_connected(g)) throw Error(errc::precondition, "parts filter needs a connected graph");
  return parts_condition(g, greedy_partition(g, GreedyMode::maximum)).ok;
}

bool parts_bound_filter_all(const Graph& g) {
  if (!is_connected(g)) throw Error(errc::precondition, "parts filter needs a connected graph");
  if (g.order() > 8) throw Error(errc::cap_exceeded, "partition enumeration here supports n <= 8");
  for (const auto& p : all_maximum_greedy_partitions(g))
    if (!parts_condition(g, p).ok) return false;
  return true;
}

bool bipartite_exclusion(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1 || k > n) throw Error(errc::invalid_argument, "k must satisfy 1 <= k <= n");
  if (!is_connected(g)) throw Error(errc::precondition, "bipartite exclusion needs a connected graph");
  const int folded = std::min(k, n - k);
  if (folded == 0) return true;
  if (folded == 1) return well_covered(g);
  return !bipartition(g).has_value();
}

BoundsReport bounds_report(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1 || k > n) throw Error(errc::invalid_argument, "k must satisfy 1 <= k <= n");
  BoundsReport r;
  r.n = n;
  r.k = k;
  r.alpha_base = independence_number(g).alpha;
  r.lower_binom = binomial(r.alpha_base, k);
  if (k <= n / 2 && !has_isolated_vertex(g)) r.upper_qbound = qbound_upper(g, k);
  if (k == 2 && !is_star(g)) r.lower_dmsa = dmsa_lower(g);
  const bool connected = is_connected(g);
  if (connected && n >= 3) {
    r.filters["k2.girth_ok"] = girth_filter(g);
    r.filters["k2.alpha_ok"] = alpha_filter(g);
    r.filters["k2.path_condition_ok"] = path_condition_filter(g);
    r.filters["k2.parts_ok"] = parts_bound_filter(g);
  }
  if (connected) r.filters["k" + std::to_string(k) + ".bipartite_excluded"] = bipartite_exclusion(g, k);
  return r;
}

}  // namespace wct
