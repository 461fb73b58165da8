#include <map>
#include <set>

#include "doctest.h"
#include "wct/canon.hpp"
#include "wct/error.hpp"
#include "wct/family.hpp"
#include "wct/independence.hpp"
#include "wct/token.hpp"

using namespace wct;

namespace {

using Cross = std::vector<std::pair<int, int>>;

// Cross patterns between K_m and K_n using only the first `cols` members of
// Y, one per isomorphism class of the resulting graph. Rows are taken as a
// non-decreasing sequence of masks.
std::vector<TwoCliqueGraph> cross_patterns(int m, int n, int cols) {
  std::vector<TwoCliqueGraph> out;
  std::set<std::string> seen;
  std::vector<Mask> rows(m, 0);
  auto rec = [&](auto&& self, int i, Mask from) -> void {
    if (i == m) {
      Cross c;
      for (int x = 0; x < m; ++x) for_each_bit(rows[x], [&](int y) { c.emplace_back(x, y); });
      auto g = build_two_clique(m, n, c);
      if (seen.insert(canonical_form(g.graph())).second) out.push_back(std::move(g));
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

bool exact_wc(const TwoCliqueGraph& g) { return well_covered(token_graph(g.graph(), 2).host()); }
int exact_alpha(const TwoCliqueGraph& g) { return independence_number(token_graph(g.graph(), 2).host()).alpha; }

Graph from_one_based(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a - 1, b - 1);
  return g;
}

Graph clique_on(int n, int from, int to) {
  Graph g(n);
  for (int a = from; a <= to; ++a)
    for (int b = a + 1; b <= to; ++b) g.add_edge(a - 1, b - 1);
  return g;
}

bool has_rule(const std::vector<ForbiddenFinding>& f, ForbiddenRule r) {
  for (const auto& x : f)
    if (x.rule == r) return true;
  return false;
}

}  // namespace

TEST_CASE("two-clique construction") {
  const auto g = build_two_clique(3, 5, {{0, 0}});
  CHECK(g.graph().order() == 8);
  CHECK(g.graph().edge_count() == 3 + 10 + 1);
  Graph expect = clique_on(8, 1, 5);
  for (int a = 6; a <= 8; ++a)
    for (int b = a + 1; b <= 8; ++b) expect.add_edge(a - 1, b - 1);
  expect.add_edge(2, 5);
  CHECK(canonical_form(g.graph()) == canonical_form(expect));

  const auto paw = build_two_clique(1, 3, {{0, 0}});
  CHECK(canonical_form(paw.graph()) == canonical_form(from_one_based(4, {{1, 2}, {2, 3}, {3, 4}, {2, 4}})));

  const auto split = build_two_clique(2, 3, {});
  CHECK_FALSE(is_connected(split.graph()));

  CHECK_THROWS_AS(build_two_clique(3, 2, {}), Error);
  CHECK_THROWS_AS(build_two_clique(0, 2, {}), Error);
  CHECK_THROWS_AS(build_two_clique(2, 3, {{2, 0}}), Error);
  CHECK_THROWS_AS(build_two_clique(2, 3, {{0, 3}}), Error);
}

TEST_CASE("independence formula examples") {
  CHECK(alpha_formula(build_two_clique(3, 5, {{0, 0}})) == std::optional<int>(6));
  CHECK(alpha_formula(build_two_clique(4, 4, {})) == std::optional<int>(8));
  CHECK_FALSE(alpha_formula(build_two_clique(4, 4, {{0, 0}})).has_value());
  const auto fig = build_wellcovered_family(FamilyVariant::bbc, 3, 7, 2, 2);
  CHECK(alpha_formula(fig) == std::optional<int>(7));
  CHECK(exact_alpha(fig) == 7);
}

TEST_CASE("forbidden configuration examples") {
  CHECK(has_rule(detect_forbidden(build_two_clique(2, 3, {{0, 0}})), ForbiddenRule::even_order));
  CHECK_FALSE(has_rule(detect_forbidden(build_two_clique(2, 3, {})), ForbiddenRule::even_order));

  const auto zig = build_two_clique(3, 5, {{0, 0}, {0, 1}, {1, 1}});
  const auto fz = detect_forbidden(zig);
  REQUIRE(has_rule(fz, ForbiddenRule::zigzag));
  CHECK_FALSE(exact_wc(zig));

  const auto stripes = build_two_clique(3, 6, {{0, 0}, {1, 1}, {2, 2}});
  const auto fs = detect_forbidden(stripes);
  REQUIRE(has_rule(fs, ForbiddenRule::three_stripes));
  for (const auto& f : fs)
    if (f.rule == ForbiddenRule::three_stripes) {
      REQUIRE(f.witness.size() == 6);
      for (int i = 0; i < 6; i += 2) CHECK(stripes.graph().adjacent(f.witness[i], f.witness[i + 1]));
    }
  CHECK_FALSE(exact_wc(stripes));

  const auto single = build_two_clique(3, 3, {{0, 0}});
  CHECK(has_rule(detect_forbidden(single), ForbiddenRule::equal_single_edge));
  CHECK_FALSE(exact_wc(single));
  CHECK(detect_forbidden(build_two_clique(1, 1, {{0, 0}})).empty());
}

TEST_CASE("well-covered family builders") {
  const auto a = build_wellcovered_family(FamilyVariant::bba, 3, 5, 1, 0);
  CHECK(canonical_form(a.graph()) == canonical_form(build_two_clique(3, 5, {{0, 0}}).graph()));
  CHECK(exact_wc(a));

  // Figure with cliques {1..7}, {8,9,10} and cross edges 4-8, 4-10, 9-3, 9-5.
  Graph fig = clique_on(10, 1, 7);
  for (int x = 8; x <= 10; ++x)
    for (int y = x + 1; y <= 10; ++y) fig.add_edge(x - 1, y - 1);
  for (auto [u, v] : {std::pair{4, 8}, {4, 10}, {9, 3}, {9, 5}}) fig.add_edge(u - 1, v - 1);
  const auto c = build_wellcovered_family(FamilyVariant::bbc, 3, 7, 2, 2);
  CHECK(canonical_form(c.graph()) == canonical_form(fig));
  CHECK(exact_wc(c));

  const auto empty = build_wellcovered_family(FamilyVariant::bba, 3, 5, 0, 0);
  CHECK(empty.cross().empty());
  CHECK(exact_wc(empty));

  CHECK_THROWS_WITH_AS(build_wellcovered_family(FamilyVariant::bba, 3, 5, 2, 2), doctest::Contains("s + t <= m"), Error);
  CHECK_THROWS_WITH_AS(build_wellcovered_family(FamilyVariant::bbb, 3, 5, 2, 1), doctest::Contains("n - m"), Error);
  CHECK_THROWS_WITH_AS(build_wellcovered_family(FamilyVariant::bbc, 3, 5, 3, 0), doctest::Contains("s + 1"), Error);
  CHECK_THROWS_AS(build_wellcovered_family(FamilyVariant::bba, 2, 5, 0, 0), Error);
  CHECK_THROWS_AS(build_wellcovered_family(FamilyVariant::bba, 5, 5, 0, 0), Error);
  CHECK_THROWS_AS(build_wellcovered_family(FamilyVariant::bbb, 1, 5, 1, 1), Error);
}

TEST_CASE("classification examples") {
  const auto both_odd = classify_two_clique(build_two_clique(3, 5, {}));
  CHECK(both_odd.verdict == Verdict::well_covered_by_theorem);
  CHECK(both_odd.theorem == "bba");
  CHECK(both_odd.s == 0);
  CHECK(both_odd.t == 0);
  CHECK(both_odd.exact == std::optional<bool>(true));

  const auto single = classify_two_clique(build_two_clique(3, 3, {{0, 0}}));
  CHECK(single.verdict == Verdict::not_well_covered_by_theorem);
  CHECK(single.theorem == "equal_single_edge");

  const auto star = build_two_clique(3, 5, {{0, 0}, {0, 1}});
  CHECK(match_variant(star, FamilyVariant::bbb) == std::optional<std::pair<int, int>>({2, 0}));
  CHECK_FALSE(match_variant(star, FamilyVariant::bba).has_value());
  CHECK(classify_two_clique(star).verdict == Verdict::well_covered_by_theorem);

  Cross all;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) all.emplace_back(i, j);
  const auto k5 = classify_two_clique(build_two_clique(2, 3, all));
  CHECK(k5.theorem == "complete");

  const auto big = classify_two_clique(build_two_clique(5, 7, {}), 10);
  CHECK_FALSE(big.exact.has_value());
}

TEST_CASE("every family instance up to ten vertices is well-covered") {
  int count = 0;
  for (FamilyVariant v : {FamilyVariant::bba, FamilyVariant::bbb, FamilyVariant::bbc})
    for (int m = 1; m <= 9; m += 2)
      for (int n = m + 2; m + n <= 10; n += 2)
        for (int s = 0; s <= n; ++s)
          for (int t = 0; t <= n; ++t) {
            std::optional<TwoCliqueGraph> g;
            try {
              g = build_wellcovered_family(v, m, n, s, t);
            } catch (const Error&) {
              continue;
            }
            ++count;
            CAPTURE(variant_name(v));
            CAPTURE(m);
            CAPTURE(n);
            CAPTURE(s);
            CAPTURE(t);
            CHECK(exact_wc(*g));
            const auto st = match_variant(*g, v);
            REQUIRE(st.has_value());
            if (v != FamilyVariant::bbc) CHECK(*st == std::pair{std::max(s, t), std::min(s, t)});
          }
  CHECK(count > 50);
}

TEST_CASE("forbidden findings and the formula agree with exact checks") {
  int findings = 0, formula = 0;
  for (int m = 1; m <= 5; ++m)
    for (int n = m; m + n <= 10; ++n)
      for (const auto& g : cross_patterns(m, n, n - m)) {
        const auto f = alpha_formula(g);
        REQUIRE(f.has_value());
        CHECK(*f == exact_alpha(g));
        ++formula;
        if (m + n > 9) continue;
        const auto found = detect_forbidden(g);
        if (!found.empty()) {
          ++findings;
          CHECK_FALSE(exact_wc(g));
        }
      }
  for (int m = 2; m <= 4; ++m) {
    const auto g = build_two_clique(m, m, {{0, 0}});
    CHECK(has_rule(detect_forbidden(g), ForbiddenRule::equal_single_edge));
    CHECK_FALSE(exact_wc(g));
  }
  CHECK(findings > 20);
  CHECK(formula > 100);
}

TEST_CASE("theorem verdicts never contradict the exact check") {
  std::map<std::string, int> seen;
  for (int m = 1; m <= 4; ++m)
    for (int n = m; m + n <= 8; ++n)
      for (const auto& g : cross_patterns(m, n, n)) {
        const auto c = classify_two_clique(g, 8);
        REQUIRE(c.exact.has_value());
        if (c.verdict == Verdict::well_covered_by_theorem) CHECK(*c.exact);
        if (c.verdict == Verdict::not_well_covered_by_theorem) CHECK_FALSE(*c.exact);
        ++seen[verdict_name(c.verdict)];
      }
  CHECK(seen["well_covered_by_theorem"] > 0);
  CHECK(seen["not_well_covered_by_theorem"] > 0);
  CHECK(seen["undecided"] > 0);
}

TEST_CASE("equal cliques meeting the split bound are not well-covered") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& g : cross_patterns(n, n, n)) {
      if (g.cross().empty()) continue;
      if (exact_alpha(g) == 2 * (n / 2) + n) CHECK_FALSE(exact_wc(g));
    }
}

TEST_CASE("two-clique decomposition") {
  const auto fig = build_wellcovered_family(FamilyVariant::bbc, 3, 7, 2, 2);
  const auto splits = decompose_two_clique(fig.graph());
  REQUIRE(splits.size() == 1);
  CHECK(splits[0].split.m() == 3);
  CHECK(canonical_form(splits[0].split.graph()) == canonical_form(fig.graph()));

  CHECK(decompose_two_clique(cycle_graph(5)).empty());
  // K_4 splits as 1+3 (four ways) and 2+2 (three ways, both orders).
  CHECK(decompose_two_clique(complete_graph(4)).size() == 4 + 6);
  for (const auto& s : decompose_two_clique(path_graph(4))) {
    for (int v = 0; v < 4; ++v)
      for (int w = 0; w < 4; ++w)
        CHECK(s.split.graph().adjacent(v, w) == path_graph(4).adjacent(s.origin[v], s.origin[w]));
  }
}
