#include "wct/family.hpp"

#include <algorithm>

#include "wct/error.hpp"
#include "wct/independence.hpp"
#include "wct/token.hpp"

namespace wct {

TwoCliqueGraph build_two_clique(int m, int n, std::vector<std::pair<int, int>> cross) {
  if (m < 1 || n < m) throw Error(errc::invalid_argument, "need 1 <= m <= n");
  if (m + n > kMaxVertices) throw Error(errc::invalid_argument, "m + n exceeds 64");
  for (auto [i, j] : cross) {
    if (i < 0 || i >= m || j < 0 || j >= n) {
      throw Error(errc::invalid_argument, "cross pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") out of range");
    }
  }
  std::sort(cross.begin(), cross.end());
  cross.erase(std::unique(cross.begin(), cross.end()), cross.end());
  TwoCliqueGraph g(m, n);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) g.graph_.add_edge(a, b);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.graph_.add_edge(m + a, m + b);
  for (auto [i, j] : cross) g.graph_.add_edge(i, m + j);
  g.cross_ = std::move(cross);
  return g;
}

Mask TwoCliqueGraph::y_neighbors(int i) const { return graph_.neighbors(i) >> m_; }

Mask TwoCliqueGraph::x_neighbors(int j) const { return graph_.neighbors(m_ + j) & low_bits(m_); }

int TwoCliqueGraph::attached_y_count() const {
  int c = 0;
  for (int j = 0; j < n_; ++j) c += x_neighbors(j) != 0;
  return c;
}

std::optional<int> alpha_formula(const TwoCliqueGraph& g) {
  if (g.attached_y_count() > g.n() - g.m()) return std::nullopt;
  return g.m() / 2 + g.n() / 2 + g.m();
}

std::string rule_name(ForbiddenRule r) {
  switch (r) {
    case ForbiddenRule::even_order: return "even_order";
    case ForbiddenRule::zigzag: return "zigzag";
    case ForbiddenRule::three_stripes: return "three_stripes";
    case ForbiddenRule::equal_single_edge: return "equal_single_edge";
  }
  return "?";
}

std::vector<ForbiddenFinding> detect_forbidden(const TwoCliqueGraph& g) {
  std::vector<ForbiddenFinding> out;
  const int m = g.m(), n = g.n();
  const bool few_attached = g.attached_y_count() <= n - m;

  if (few_attached && (m % 2 == 0 || n % 2 == 0) && is_connected(g.graph())) {
    ForbiddenFinding f{ForbiddenRule::even_order, {}};
    for (int j = 0; j < n; ++j)
      if (g.x_neighbors(j) != 0) f.witness.push_back(g.y_vertex(j));
    out.push_back(std::move(f));
  }

  if (few_attached && n >= m + 2) {
    // x1 ~ y1, y2 and x2 ~ y2.
    bool found = false;
    for (int x1 = 0; x1 < m && !found; ++x1)
      for_each_bit(g.y_neighbors(x1), [&](int y2) {
        if (found) return;
        const Mask others = g.x_neighbors(y2) & ~bit(x1);
        const Mask y1s = g.y_neighbors(x1) & ~bit(y2);
        if (others == 0 || y1s == 0) return;
        const int x2 = std::countr_zero(others);
        const int y1 = std::countr_zero(y1s);
        out.push_back({ForbiddenRule::zigzag, {g.x_vertex(x1), g.x_vertex(x2), g.y_vertex(y1), g.y_vertex(y2)}});
        found = true;
      });
  }

  if (few_attached && n >= m + 3) {
    const auto& c = g.cross();
    bool found = false;
    for (std::size_t a = 0; a < c.size() && !found; ++a)
      for (std::size_t b = a + 1; b < c.size() && !found; ++b) {
        if (c[a].first == c[b].first || c[a].second == c[b].second) continue;
        for (std::size_t d = b + 1; d < c.size() && !found; ++d) {
          if (c[d].first == c[a].first || c[d].first == c[b].first) continue;
          if (c[d].second == c[a].second || c[d].second == c[b].second) continue;
          out.push_back({ForbiddenRule::three_stripes,
                         {g.x_vertex(c[a].first), g.y_vertex(c[a].second), g.x_vertex(c[b].first), g.y_vertex(c[b].second),
                          g.x_vertex(c[d].first), g.y_vertex(c[d].second)}});
          found = true;
        }
      }
  }

  if (m == n && m > 1 && g.cross().size() == 1) {
    out.push_back({ForbiddenRule::equal_single_edge, {g.x_vertex(g.cross()[0].first), g.y_vertex(g.cross()[0].second)}});
  }
  return out;
}

std::string variant_name(FamilyVariant v) {
  switch (v) {
    case FamilyVariant::bba: return "bba";
    case FamilyVariant::bbb: return "bbb";
    case FamilyVariant::bbc: return "bbc";
  }
  return "?";
}

std::optional<FamilyVariant> variant_from_name(const std::string& s) {
  if (s == "bba") return FamilyVariant::bba;
  if (s == "bbb") return FamilyVariant::bbb;
  if (s == "bbc") return FamilyVariant::bbc;
  return std::nullopt;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(errc::precondition, what);
}

// Members of a side attached to the other side, with their neighbourhoods
// pairwise disjoint; returns the neighbourhood sizes, largest first.
std::optional<std::vector<int>> disjoint_stars(const std::vector<Mask>& nbhd) {
  std::vector<int> sizes;
  Mask seen = 0;
  for (Mask s : nbhd) {
    if (s == 0) continue;
    if ((s & seen) != 0) return std::nullopt;
    seen |= s;
    sizes.push_back(std::popcount(s));
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

}  // namespace

TwoCliqueGraph build_wellcovered_family(FamilyVariant v, int m, int n, int s, int t) {
  require(m >= 1 && n > m, "needs n > m >= 1");
  require(m % 2 == 1 && n % 2 == 1, "needs m and n odd");
  require(s >= 0 && t >= 0, "needs s, t >= 0");
  std::vector<std::pair<int, int>> cross;
  switch (v) {
    case FamilyVariant::bba:
      require(s + t <= m, "bba needs s + t <= m");
      for (int i = 0; i < s; ++i) cross.emplace_back(i, 0);
      for (int i = s; i < s + t; ++i) cross.emplace_back(i, 1);
      break;
    case FamilyVariant::bbb:
      require(s + t <= n - m, "bbb needs s + t <= n - m");
      for (int j = 0; j < s; ++j) cross.emplace_back(0, j);
      if (m >= 2) {
        for (int j = s; j < s + t; ++j) cross.emplace_back(1, j);
      } else {
        require(t == 0, "bbb with m = 1 needs t = 0");
      }
      break;
    case FamilyVariant::bbc:
      require(s + 1 <= m, "bbc needs s + 1 <= m");
      require(t + 1 <= n - m, "bbc needs t + 1 <= n - m");
      for (int j = 1; j <= t; ++j) cross.emplace_back(0, j);
      for (int i = 1; i <= s; ++i) cross.emplace_back(i, 0);
      break;
  }
  return build_two_clique(m, n, std::move(cross));
}

std::optional<std::pair<int, int>> match_variant(const TwoCliqueGraph& g, FamilyVariant v) {
  const int m = g.m(), n = g.n();
  if (n <= m || m % 2 == 0 || n % 2 == 0) return std::nullopt;
  std::vector<Mask> ys(n), xs(m);
  for (int j = 0; j < n; ++j) ys[j] = g.x_neighbors(j);
  for (int i = 0; i < m; ++i) xs[i] = g.y_neighbors(i);
  switch (v) {
    case FamilyVariant::bba: {
      const auto sizes = disjoint_stars(ys);
      if (!sizes || sizes->size() > 2) return std::nullopt;
      const int s = sizes->empty() ? 0 : (*sizes)[0];
      const int t = sizes->size() < 2 ? 0 : (*sizes)[1];
      if (s + t > m) return std::nullopt;
      return std::pair{s, t};
    }
    case FamilyVariant::bbb: {
      const auto sizes = disjoint_stars(xs);
      if (!sizes || sizes->size() > 2) return std::nullopt;
      const int s = sizes->empty() ? 0 : (*sizes)[0];
      const int t = sizes->size() < 2 ? 0 : (*sizes)[1];
      if (s + t > n - m) return std::nullopt;
      return std::pair{s, t};
    }
    case FamilyVariant::bbc: {
      // Some non-adjacent x1, y1 meet every cross edge.
      for (int x1 = 0; x1 < m; ++x1)
        for (int y1 = 0; y1 < n; ++y1) {
          if ((xs[x1] >> y1) & 1U) continue;
          bool covers = true;
          for (auto [i, j] : g.cross())
            if (i != x1 && j != y1) covers = false;
          if (!covers) continue;
          const int s = std::popcount(ys[y1]);
          const int t = std::popcount(xs[x1]);
          if (s + 1 <= m && t + 1 <= n - m) return std::pair{s, t};
        }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::well_covered_by_theorem: return "well_covered_by_theorem";
    case Verdict::not_well_covered_by_theorem: return "not_well_covered_by_theorem";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

Classification classify_two_clique(const TwoCliqueGraph& g, int exact_limit) {
  Classification c;
  c.findings = detect_forbidden(g);
  if (!c.findings.empty()) {
    c.verdict = Verdict::not_well_covered_by_theorem;
    c.theorem = rule_name(c.findings.front().rule);
  } else if (is_complete(g.graph())) {
    c.verdict = Verdict::well_covered_by_theorem;
    c.theorem = "complete";
  } else {
    for (FamilyVariant v : {FamilyVariant::bba, FamilyVariant::bbb, FamilyVariant::bbc}) {
      if (auto st = match_variant(g, v)) {
        c.verdict = Verdict::well_covered_by_theorem;
        c.theorem = variant_name(v);
        c.s = st->first;
        c.t = st->second;
        break;
      }
    }
  }
  if (g.m() + g.n() <= exact_limit) c.exact = well_covered(token_graph(g.graph(), 2).host());
  return c;
}

std::vector<TwoCliqueSplit> decompose_two_clique(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw Error(errc::cap_exceeded, "two-clique decomposition supports n <= 20");
  std::vector<TwoCliqueSplit> out;
  const Mask all = g.vertices();
  for (Mask x = 1; x < bit(n); ++x) {
    const Mask y = all & ~x;
    const int mx = std::popcount(x), my = std::popcount(y);
    if (my == 0 || mx > my) continue;
    if (!g.is_clique(x) || !g.is_clique(y)) continue;
    std::vector<int> origin = bits_to_list(x);
    for (int v : bits_to_list(y)) origin.push_back(v);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[origin[i]] = i;
    std::vector<std::pair<int, int>> cross;
    for_each_bit(x, [&](int u) {
      for_each_bit(g.neighbors(u) & y, [&](int v) { cross.emplace_back(pos[u], pos[v] - mx); });
    });
    out.push_back({build_two_clique(mx, my, std::move(cross)), std::move(origin)});
  }
  return out;
}

}  // namespace wct
