// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "wct/bounds.hpp"
#include "wct/canon.hpp"
#include "wct/combinatorics.hpp"
#include "wct/constructions.hpp"
#include "wct/designs.hpp"
#include "wct/error.hpp"
#include "wct/family.hpp"
#include "wct/independence.hpp"
#include "wct/search.hpp"
#include "wct/token.hpp"

using namespace wct;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

std::filesystem::path data_dir() {
  if (const char* d = std::getenv("WCT_DATA_DIR")) return d;
  return WCT_DATA_DIR;
}

SearchOptions uncached() {
  SearchOptions o;
  o.cache_dir = std::filesystem::path();
  return o;
}

std::map<int, SearchResult>& search_results() {
  static std::map<int, SearchResult> results;
  return results;
}

const SearchResult& search(int n) {
  auto& r = search_results();
  if (!r.count(n)) r.emplace(n, search_order(n, uncached()));
  return r.at(n);
}

int alpha(const Graph& g, int k) { return independence_number(token_graph(g, k).host()).alpha; }

bool exact_wc(const Graph& g, int k) { return well_covered(token_graph(g, k).host()); }

void table_counts(Outcome& o) {
  const int expected[] = {1, 1, 3, 1, 5, 1, 13, 9};
  for (int n = 2; n <= 9; ++n) {
    const auto& r = search(n);
    o.note << r.survivors.size() << (n < 9 ? "," : "");
    o.expect(r.survivors.size() == static_cast<std::size_t>(expected[n - 2]), "order " + std::to_string(n));
  }
}

void catalogue_match(Outcome& o) {
  for (int n : {4, 6, 8, 9}) {
    const auto expected = read_graph6_file(data_dir() / "catalogue" / ("expected-n" + std::to_string(n) + ".g6"));
    const auto d = verify_catalogue(search(n).survivors, expected);
    o.expect(d.empty(), "order " + std::to_string(n) + " differs (" + std::to_string(d.missing.size()) + " missing, " +
                            std::to_string(d.unexpected.size()) + " unexpected)");
  }
  o.note << "orders 4,6,8,9 compared";
}

void named_alphas(Outcome& o) {
  auto check = [&](const std::string& name, int got, int want) {
    o.expect(got == want, name + " = " + std::to_string(got) + ", expected " + std::to_string(want));
  };
  check("T2(C5)", alpha(cycle_graph(5), 2), 5);
  for (int n = 2; n <= 10; ++n) check("T2(K" + std::to_string(n) + ")", alpha(complete_graph(n), 2), n / 2);
  for (int n = 2; n <= 4; ++n) {
    check("T2(P" + std::to_string(2 * n) + ")", alpha(path_graph(2 * n), 2), n * n);
    check("T2(C" + std::to_string(2 * n) + ")", alpha(cycle_graph(2 * n), 2), n * n);
    check("T2(K" + std::to_string(n) + "," + std::to_string(n) + ")", alpha(complete_bipartite_graph(n, n), 2), n * n);
  }
  check("T2(Petersen)", alpha(petersen_graph(), 2), 16);
  check("T3(K7)", alpha(complete_graph(7), 3), 7);
  check("T3(K9)", alpha(complete_graph(9), 3), 12);
  o.note << "34 values checked";
}

Mask pair1(int a, int b) { return bit(a - 1) | bit(b - 1); }

VertexSet one_based(std::initializer_list<int> labels) {
  Mask m = 0;
  for (int v : labels) m |= bit(v - 1);
  return VertexSet(m);
}

bool host_maximal(const Graph& g, const TokenSet& s) {
  const TokenGraph t = token_graph(g, 2);
  IndependentSet idx;
  for (Mask m : s) idx.push_back(static_cast<int>(t.index_of(m)));
  std::sort(idx.begin(), idx.end());
  return t.host().is_maximal_independent(idx);
}

void worked_constructions(Outcome& o) {
  const Graph kite = Graph::from_edges(6, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 5}, {3, 4}});
  const TokenSet h1 = maximal_from_partition(kite, IndependentPartition(kite, {one_based({1, 3, 5, 6}), one_based({2}), one_based({4})}));
  const TokenSet h2 = maximal_from_partition(kite, IndependentPartition(kite, {one_based({2, 5, 6}), one_based({1, 4}), one_based({3})}));
  const TokenSet h3 = maximal_from_partition(kite, IndependentPartition(kite, {one_based({2, 5, 6}), one_based({1, 3}), one_based({4})}));
  std::size_t want = 5;
  for (const auto* h : {&h1, &h2, &h3}) {
    o.expect(h->size() == want, "six-vertex set of size " + std::to_string(h->size()));
    o.expect(host_maximal(kite, *h), "six-vertex set not maximal");
    ++want;
  }
  TokenSet first{pair1(1, 2), pair1(2, 3), pair1(2, 5), pair1(2, 6), pair1(5, 6)};
  std::sort(first.begin(), first.end());
  o.expect(h1 == first, "first six-vertex set differs");

  const Graph p = petersen_graph();
  const IndependentPartition parts(p, {VertexSet{0, 1, 9}, VertexSet{2, 5, 7}, VertexSet{4, 6}, VertexSet{3, 8}});
  const TokenSet s13 = maximal_from_partition(p, parts);
  const TokenSet s14 = maximal_from_coloring_edges(p, parts, std::vector<Edge>{{0, 4}, {4, 3}, {3, 9}, {9, 6}, {6, 8}, {0, 8}});
  const auto s15 = edge_set_independent_set(p);
  const TokenSet s16 = hybrid_independent_set(p, petersen_hybrid_recipe());
  want = 13;
  for (const TokenSet* s : {&s13, &s14, &s15.set, &s16}) {
    o.expect(s->size() == want, "Petersen set of size " + std::to_string(s->size()));
    o.expect(host_maximal(p, *s), "Petersen set of size " + std::to_string(s->size()) + " not maximal");
    ++want;
  }
  o.note << "sizes 5,6,7 and 13,14,15,16 verified";
}

void bipartite_classification(Outcome& o) {
  int checked = 0;
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      if (!bipartition(g)) continue;
      for (int k = 1; k <= (n + 1) / 2; ++k) {
        if (binomial(n, k) > kDefaultTokenCap) continue;
        const bool wc = is_well_covered(token_graph(g, k).host(), true).verdict;
        if (n >= 5) {
          if (k >= 2) o.expect(!wc, to_graph6(g) + " k=" + std::to_string(k) + " is well-covered");
        } else {
          o.expect(wc == (k == 1 && well_covered(g)), to_graph6(g) + " k=" + std::to_string(k) + " breaks the small-order rule");
        }
        ++checked;
      }
    }
  o.note << checked << " (graph, k) pairs";
}

void filter_soundness(Outcome& o) {
  int falses = 0;
  for (int n = 3; n <= 7; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      std::map<int, bool> wc;
      auto exact = [&](int k) {
        const int f = std::min(k, n - k);
        if (!wc.count(f)) wc[f] = f == 0 || exact_wc(g, f);
        return wc[f];
      };
      const std::string name = to_graph6(g);
      for (auto [filter, ok] : {std::pair{"girth", girth_filter(g)}, {"alpha", alpha_filter(g)}, {"path", path_condition_filter(g)}}) {
        if (ok) continue;
        ++falses;
        o.expect(!exact(2), std::string(filter) + " rejects well-covered " + name);
      }
      for (int k = 1; k <= n; ++k) {
        if (bipartite_exclusion(g, k)) continue;
        ++falses;
        o.expect(!exact(k), "bipartite rejects well-covered " + name + " k=" + std::to_string(k));
      }
    }
  o.note << falses << " rejections checked";
}

struct Equality {
  Graph g;
  int k;
  TokenSet s;
};

std::vector<Equality>& equalities() {
  static std::vector<Equality> list;
  return list;
}

void bound_sandwich(Outcome& o) {
  int pairs = 0;
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : enumerate_connected_graphs(n))
      for (int k : {2, 3}) {
        if (2 * k > n) continue;
        const TokenGraph t = token_graph(g, k);
        const AlphaResult a = independence_number(t.host());
        const auto lower = binom_lower(g, k);
        const auto upper = qbound_upper(g, k);
        const std::string name = to_graph6(g) + " k=" + std::to_string(k);
        o.expect(lower <= static_cast<std::uint64_t>(a.alpha), name + " below the binomial bound");
        o.expect(static_cast<std::uint64_t>(a.alpha) <= upper, name + " above the upper bound");
        if (k == 2 && !is_star(g)) o.expect(dmsa_lower(g) <= static_cast<std::uint64_t>(a.alpha), name + " below the degree bound");
        if (qbound_attained_exactly(g, k, a.alpha)) {
          TokenSet s;
          for (int i : a.witness) s.push_back(t.subset(static_cast<std::size_t>(i)));
          std::sort(s.begin(), s.end());
          equalities().push_back({g, k, std::move(s)});
        }
        ++pairs;
      }
  o.note << pairs << " (graph, k) pairs with k <= n/2, " << equalities().size() << " equalities";
}

void design_round_trip(Outcome& o) {
  o.expect(!equalities().empty(), "no equality instances recorded");
  for (const auto& e : equalities()) {
    const DesignCertificate c = extract_design_from_equality(e.g, e.k, e.s);
    o.expect(c.t == e.k - 1 && verify_design(c).valid, "design from " + to_graph6(e.g) + " k=" + std::to_string(e.k));
  }
  for (int n : {7, 9}) {
    const auto d = johnson_equality(n, 3);
    o.expect(d.has_value() && d->t == 2 && d->lambda == 1 && verify_design(*d).valid, "triple system on " + std::to_string(n));
  }
  o.expect(!johnson_equality(6, 3).has_value(), "a design on 6 points was found");
  std::vector<Mask> blocks;
  for (auto b : {std::array{1, 2, 3}, {3, 6, 7}, {3, 4, 5}, {1, 4, 7}, {2, 5, 6}}) blocks.push_back(bit(b[0] - 1) | bit(b[1] - 1) | bit(b[2] - 1));
  const auto partial = maximal_partial_steiner_check(7, blocks);
  o.expect(partial.independent && partial.maximal && !partial.maximum, "partial system is not maximal-not-maximum");
  o.note << equalities().size() << " extracted designs verified";
}

std::vector<TwoCliqueGraph> cross_patterns(int m, int n, int cols, bool dedup) {
  std::vector<TwoCliqueGraph> out;
  std::set<std::string> seen;
  std::vector<Mask> rows(m, 0);
  auto rec = [&](auto&& self, int i, Mask from) -> void {
    if (i == m) {
      std::vector<std::pair<int, int>> c;
      for (int x = 0; x < m; ++x) for_each_bit(rows[x], [&](int y) { c.emplace_back(x, y); });
      auto g = build_two_clique(m, n, c);
      if (!dedup || seen.insert(canonical_form(g.graph())).second) out.push_back(std::move(g));
      return;
    }
    for (Mask r = from; r < bit(cols); ++r) {
      rows[i] = r;
      self(self, i + 1, r);
    }
  };
  rec(rec, 0, 0);
  return out;
}

void family_theorems(Outcome& o) {
  int instances = 0, findings = 0, formulas = 0;
  for (FamilyVariant v : {FamilyVariant::bba, FamilyVariant::bbb, FamilyVariant::bbc})
    for (int m = 1; m <= 10; ++m)
      for (int n = m; m + n <= 10; ++n)
        for (int s = 0; s <= n; ++s)
          for (int t = 0; t <= n; ++t) {
            std::optional<TwoCliqueGraph> g;
            try {
              g = build_wellcovered_family(v, m, n, s, t);
            } catch (const Error&) {
              continue;
            }
            ++instances;
            o.expect(exact_wc(g->graph(), 2), variant_name(v) + " instance " + to_graph6(g->graph()));
          }

  std::map<std::string, bool> wc;
  for (int m = 1; m <= 4; ++m)
    for (int n = m; m + n <= 9; ++n)
      for (const auto& g : cross_patterns(m, n, n, false)) {
        const auto found = detect_forbidden(g);
        if (found.empty()) continue;
        ++findings;
        const std::string key = canonical_form(g.graph());
        if (!wc.count(key)) wc[key] = exact_wc(g.graph(), 2);
        o.expect(!wc[key], rule_name(found[0].rule) + " finding on well-covered " + key);
      }

  for (int m = 1; m <= 5; ++m)
    for (int n = m; m + n <= 10; ++n)
      for (const auto& g : cross_patterns(m, n, n - m, true)) {
        const auto f = alpha_formula(g);
        o.expect(f.has_value(), "formula hypothesis rejected");
        o.expect(f && *f == alpha(g.graph(), 2), "formula differs on " + to_graph6(g.graph()));
        ++formulas;
      }
  o.note << instances << " family instances, " << findings << " findings, " << formulas << " formula checks";
}

void membership_audit(Outcome& o) {
  std::size_t total = 0;
  for (int n = 2; n <= 8; ++n) {
    const auto a = family_membership_audit(search(n).survivors);
    o.expect(a.unmatched.empty(), "order " + std::to_string(n) + " has unmatched survivors");
    total += a.entries.size();
  }
  o.note << total << " survivors matched";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"survivor counts for orders 2..9", table_counts},
      {"catalogue match", catalogue_match},
      {"named independence numbers", named_alphas},
      {"worked constructions", worked_constructions},
      {"bipartite classification", bipartite_classification},
      {"filter soundness", filter_soundness},
      {"bound sandwich", bound_sandwich},
      {"design round trip", design_round_trip},
      {"two-clique family results", family_theorems},
      {"family membership of small survivors", membership_audit},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failed;
    std::printf("criterion %zu: %s  %s [%s] (%.1fs)\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(), o.note.str().c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
