#include "wct/independence.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>

#include "wct/error.hpp"

namespace wct {

namespace {

template <int W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  int first() const {
    for (int i = 0; i < W; ++i)
      if (w[i]) return i * 64 + std::countr_zero(w[i]);
    return -1;
  }
  void set(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1U; }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (int i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r;
    for (int i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  Bits minus(const Bits& o) const {
    Bits r;
    for (int i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  int and_count(const Bits& o) const {
    int c = 0;
    for (int i = 0; i < W; ++i) c += std::popcount(w[i] & o.w[i]);
    return c;
  }
  template <class F>
  void each(F&& f) const {
    for (int i = 0; i < W; ++i) {
      std::uint64_t x = w[i];
      while (x) {
        f(i * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }
};

template <int W>
struct Rows {
  int n = 0;
  std::vector<Bits<W>> adj;
  std::vector<Bits<W>> closed;
  Bits<W> all;

  explicit Rows(const HostGraph& g) : n(g.order()), adj(n), closed(n) {
    for (int v = 0; v < n; ++v) {
      for (int i = 0; i < W; ++i) adj[v].w[i] = g.row(v)[i];
      closed[v] = adj[v];
      closed[v].set(v);
      all.set(v);
    }
  }
};

template <int W, class Visit>
bool enumerate(const Rows<W>& g, Bits<W> p, Bits<W> x, std::vector<int>& r, std::vector<int>& scratch, Visit& visit) {
  if (!p.any()) {
    if (x.any()) return true;
    scratch = r;
    std::sort(scratch.begin(), scratch.end());
    return visit(scratch);
  }
  int pivot = -1;
  int pivot_cost = INT_MAX;
  (p | x).each([&](int u) {
    const int c = p.and_count(g.closed[u]);
    if (c < pivot_cost) {
      pivot_cost = c;
      pivot = u;
    }
  });
  const Bits<W> branch = p & g.closed[pivot];
  bool keep_going = true;
  branch.each([&](int v) {
    if (!keep_going) return;
    r.push_back(v);
    keep_going = enumerate(g, p.minus(g.closed[v]), x.minus(g.closed[v]), r, scratch, visit);
    r.pop_back();
    p.reset(v);
    x.set(v);
  });
  return keep_going;
}

template <int W, class Visit>
void enumerate_all(const HostGraph& host, Visit& visit) {
  const Rows<W> g(host);
  std::vector<int> r, scratch;
  enumerate(g, g.all, Bits<W>{}, r, scratch, visit);
}

template <int W>
struct MaxSearch {
  const Rows<W>& g;
  std::vector<int> current;
  std::vector<int> best;

  // P is coloured into cliques of the host; an independent set meets each at
  // most once, so the colour number bounds what P can still add.
  void expand(Bits<W> p) {
    std::vector<int> order;
    std::vector<int> colour;
    order.reserve(p.count());
    colour.reserve(p.count());
    Bits<W> uncoloured = p;
    int c = 0;
    while (uncoloured.any()) {
      ++c;
      Bits<W> q = uncoloured;
      while (q.any()) {
        const int v = q.first();
        uncoloured.reset(v);
        q = q & g.adj[v];
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(current.size()) + colour[i] <= static_cast<int>(best.size())) return;
      const int v = order[i];
      current.push_back(v);
      const Bits<W> next = p.minus(g.closed[v]);
      if (next.any()) {
        expand(next);
      } else if (current.size() > best.size()) {
        best = current;
      }
      current.pop_back();
      p.reset(v);
    }
  }
};

template <int W>
AlphaResult alpha_branch_and_bound(const HostGraph& host) {
  const Rows<W> g(host);
  MaxSearch<W> s{g, {}, {}};
  // Min-degree greedy start.
  Bits<W> p = g.all;
  while (p.any()) {
    int pick = -1, cost = INT_MAX;
    p.each([&](int v) {
      const int c = p.and_count(g.adj[v]);
      if (c < cost) {
        cost = c;
        pick = v;
      }
    });
    s.best.push_back(pick);
    p = p.minus(g.closed[pick]);
  }
  s.expand(g.all);
  std::sort(s.best.begin(), s.best.end());
  return {static_cast<int>(s.best.size()), s.best};
}

template <class Visit>
void dispatch_enumerate(const HostGraph& g, Visit& visit) {
  switch (g.words()) {
    case 1: return enumerate_all<1>(g, visit);
    case 2: return enumerate_all<2>(g, visit);
    case 4: return enumerate_all<4>(g, visit);
    case 8: return enumerate_all<8>(g, visit);
    case 16: return enumerate_all<16>(g, visit);
  }
  throw Error(errc::cap_exceeded, "host graph too large for the independence kernel");
}

struct SizeTracker {
  explicit SizeTracker(bool stop_early) : early_exit(stop_early) {}

  bool early_exit;
  bool seen = false;
  int min_size = 0;
  int max_size = 0;
  IndependentSet small, large;

  bool operator()(const IndependentSet& s) {
    const int size = static_cast<int>(s.size());
    if (!seen) {
      seen = true;
      min_size = max_size = size;
      small = large = s;
    } else {
      if (size < min_size || (size == min_size && s < small)) {
        min_size = size;
        small = s;
      }
      if (size > max_size || (size == max_size && s < large)) {
        max_size = size;
        large = s;
      }
    }
    return !(early_exit && min_size != max_size);
  }
};

}  // namespace

void for_each_maximal_independent_set(const HostGraph& g, const std::function<bool(const IndependentSet&)>& visit) {
  auto v = [&](const IndependentSet& s) { return visit(s); };
  dispatch_enumerate(g, v);
}

std::vector<IndependentSet> maximal_independent_sets(const HostGraph& g) {
  std::vector<IndependentSet> out;
  auto v = [&](const IndependentSet& s) {
    out.push_back(s);
    return true;
  };
  dispatch_enumerate(g, v);
  return out;
}

AlphaResult independence_number(const HostGraph& g) {
  if (g.order() < 20) {
    AlphaResult best;
    bool have = false;
    auto v = [&](const IndependentSet& s) {
      const int size = static_cast<int>(s.size());
      if (!have || size > best.alpha || (size == best.alpha && s < best.witness)) {
        have = true;
        best.alpha = size;
        best.witness = s;
      }
      return true;
    };
    dispatch_enumerate(g, v);
    return best;
  }
  switch (g.words()) {
    case 1: return alpha_branch_and_bound<1>(g);
    case 2: return alpha_branch_and_bound<2>(g);
    case 4: return alpha_branch_and_bound<4>(g);
    case 8: return alpha_branch_and_bound<8>(g);
    case 16: return alpha_branch_and_bound<16>(g);
  }
  throw Error(errc::cap_exceeded, "host graph too large for the independence kernel");
}

int independence_number_within(const Graph& g, Mask within) {
  if (within == 0) return 0;
  int pick = -1;
  int low = INT_MAX;
  for_each_bit(within, [&](int v) {
    const int d = std::popcount(g.neighbors(v) & within);
    if (d < low) {
      low = d;
      pick = v;
    }
  });
  // Some vertex of N[pick] lies in every maximal independent set.
  int best = 0;
  for_each_bit(g.closed_neighbors(pick) & within, [&](int u) {
    best = std::max(best, 1 + independence_number_within(g, within & ~g.closed_neighbors(u)));
  });
  return best;
}

WellCoveredReport is_well_covered(const HostGraph& g, bool early_exit) {
  SizeTracker t(early_exit);
  bool complete = true;
  auto v = [&](const IndependentSet& s) {
    const bool more = t(s);
    if (!more) complete = false;
    return more;
  };
  dispatch_enumerate(g, v);
  WellCoveredReport r;
  r.host = g.to_graph6();
  r.verdict = t.min_size == t.max_size;
  r.min_maximal = t.min_size;
  r.max_maximal = t.max_size;
  r.witness_small = std::move(t.small);
  r.witness_large = std::move(t.large);
  r.enumeration_complete = complete;
  return r;
}

bool well_covered(const HostGraph& g) {
  int size = -1;
  bool ok = true;
  auto v = [&](const IndependentSet& s) {
    const int here = static_cast<int>(s.size());
    if (size < 0) size = here;
    ok = here == size;
    return ok;
  };
  dispatch_enumerate(g, v);
  return ok;
}

Reduction reduce_and_test(const HostGraph& g, const IndependentSet& i) {
  if (!g.is_independent(i)) throw Error(errc::not_independent, "reduction needs an independent set");
  if (g.is_maximal_independent(i)) throw Error(errc::already_maximal, "independent set is already maximal");
  std::vector<bool> gone(g.order(), false);
  for (int v : i) {
    gone[v] = true;
    for (int w = 0; w < g.order(); ++w)
      if (g.adjacent(v, w)) gone[w] = true;
  }
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (!gone[v]) keep.push_back(v);
  Reduction out{g.induced(keep), keep, Implication::inconclusive};
  if (!well_covered(out.reduced)) out.implication = Implication::g_not_well_covered;
  return out;
}

std::string implication_name(Implication v) {
  return v == Implication::g_not_well_covered ? "g_not_well_covered" : "inconclusive";
}

}  // namespace wct
