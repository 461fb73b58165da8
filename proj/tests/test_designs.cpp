#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "wct/bounds.hpp"
#include "wct/canon.hpp"
#include "wct/combinatorics.hpp"
#include "wct/designs.hpp"
#include "wct/error.hpp"
#include "wct/independence.hpp"
#include "wct/token.hpp"

using namespace wct;

namespace {

// Digits are 1-based points.
std::vector<Mask> blocks_of(std::initializer_list<const char*> words) {
  std::vector<Mask> out;
  for (const char* w : words) {
    Mask m = 0;
    for (const char* p = w; *p; ++p) m |= bit(*p - '1');
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> fano() { return blocks_of({"124", "235", "346", "457", "561", "672", "713"}); }

// Counts t-subsets per block by listing each block's t-subsets.
bool naive_design(const DesignCertificate& c) {
  std::map<Mask, std::uint64_t> count;
  for (Mask b : c.blocks) {
    std::vector<int> pts = bits_to_list(b);
    const int kk = static_cast<int>(pts.size());
    for (Mask sub = 0; sub < (Mask{1} << kk); ++sub) {
      if (std::popcount(sub) != c.t) continue;
      Mask s = 0;
      for (int i = 0; i < kk; ++i)
        if ((sub >> i) & 1U) s |= bit(pts[i]);
      ++count[s];
    }
  }
  for (Mask s : k_subsets(c.v, c.t))
    if (count[s] != c.lambda) return false;
  return true;
}

TokenSet maximum_token_set(const Graph& g, int k) {
  const TokenGraph t = token_graph(g, k);
  TokenSet s;
  for (int i : independence_number(t.host()).witness) s.push_back(t.subset(static_cast<std::size_t>(i)));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("design verification examples") {
  CHECK(verify_design({7, 3, 2, 1, fano()}).valid);
  for (int v = 3; v <= 7; ++v)
    for (int k = 0; k <= v; ++k)
      for (int t = 0; t <= k; ++t) CHECK(verify_design({v, k, t, binomial(v - t, k - t), k_subsets(v, k)}).valid);

  const auto partial = verify_design({7, 3, 2, 1, blocks_of({"123", "367", "345", "147", "256"})});
  CHECK_FALSE(partial.valid);

  // Right block count, one repeated pair.
  auto bad = fano();
  bad[0] = blocks_of({"123"})[0];
  std::sort(bad.begin(), bad.end());
  const auto r = verify_design({7, 3, 2, 1, bad});
  CHECK_FALSE(r.valid);
  REQUIRE(r.violating.has_value());
  CHECK(std::popcount(*r.violating) == 2);
}

TEST_CASE("malformed certificates") {
  CHECK_THROWS_AS(verify_design({7, 3, 4, 1, fano()}), Error);
  CHECK_THROWS_AS(verify_design({7, 8, 2, 1, fano()}), Error);
  CHECK_THROWS_AS(verify_design({6, 3, 2, 1, fano()}), Error);
  CHECK_THROWS_AS(verify_design({7, 2, 1, 1, fano()}), Error);
}

TEST_CASE("design check agrees with a naive recount") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int v = 4 + static_cast<int>(rng() % 4);
    const int k = 1 + static_cast<int>(rng() % 3);
    const int t = static_cast<int>(rng() % (k + 1));
    auto all = k_subsets(v, k);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(rng() % (all.size() + 1));
    std::sort(all.begin(), all.end());
    const std::uint64_t lambda = 1 + rng() % 3;
    const DesignCertificate c{v, k, t, lambda, all};
    CHECK(verify_design(c).valid == naive_design(c));
  }
  CHECK(naive_design({7, 3, 2, 1, fano()}));
}

TEST_CASE("designs from extremal token sets") {
  const TokenSet c5 = blocks_of({"12", "23", "34", "45", "15"});
  const auto d = extract_design_from_equality(cycle_graph(5), 2, c5);
  CHECK(d.t == 1);
  CHECK(d.lambda == 2);
  CHECK(d.blocks.size() == 5);

  for (int m = 2; m <= 4; ++m) {
    const Graph g = complete_bipartite_graph(m, m);
    const auto s = product_set(g, {VertexSet(low_bits(m)), VertexSet(low_bits(2 * m) & ~low_bits(m))});
    const auto dm = extract_design_from_equality(g, 2, s);
    CHECK(dm.v == 2 * m);
    CHECK(dm.lambda == static_cast<std::uint64_t>(m));
  }
}

TEST_CASE("extraction rejects sets off the bound") {
  CHECK_THROWS_WITH_AS(extract_design_from_equality(cycle_graph(5), 2, blocks_of({"12", "34"})),
                       doctest::Contains("upper bound"), Error);
  CHECK_THROWS_AS(extract_design_from_equality(cycle_graph(5), 2, blocks_of({"12", "13", "34", "45", "15"})), Error);
  // K_5 meets the floored bound 2, not the exact bound 5/2.
  CHECK_THROWS_AS(extract_design_from_equality(complete_graph(5), 2, blocks_of({"12", "34"})), Error);
}

TEST_CASE("odd path token graphs fall short of the upper bound") {
  // Measured values; (2m+1)m(m+1)/3 would give 10 and 28.
  CHECK(independence_number(token_graph(path_graph(5), 3).host()).alpha == 6);
  CHECK(independence_number(token_graph(path_graph(7), 3).host()).alpha == 19);
  CHECK(qbound_upper(path_graph(7), 3) == 28);
  CHECK_THROWS_AS(extract_design_from_equality(path_graph(7), 3, maximum_token_set(path_graph(7), 3)), Error);
}

TEST_CASE("Johnson equality cases") {
  const auto d7 = johnson_equality(7, 3);
  REQUIRE(d7.has_value());
  CHECK(d7->blocks.size() == 7);
  CHECK(verify_design(*d7).valid);
  const auto d9 = johnson_equality(9, 3);
  REQUIRE(d9.has_value());
  CHECK(d9->blocks.size() == 12);
  CHECK(verify_design(*d9).valid);
  CHECK_FALSE(johnson_equality(6, 3).has_value());
  CHECK(independence_number(token_graph(complete_graph(6), 3).host()).alpha < 5);
  CHECK_THROWS_AS(johnson_equality(10, 3), Error);
  CHECK_THROWS_AS(johnson_equality(7, 4), Error);
}

TEST_CASE("Johnson equality presence matches exact alpha everywhere in budget") {
  for (int n = 2; n <= 13; ++n)
    for (int k = 1; k <= n / 2; ++k) {
      if (binomial(n, k) > kExactCoverBudget) continue;
      const auto d = johnson_equality(n, k);
      const std::uint64_t cols = binomial(n, k - 1);
      const auto alpha = static_cast<std::uint64_t>(independence_number(token_graph(complete_graph(n), k).host()).alpha);
      CHECK(d.has_value() == (k * alpha == cols));
    }
}

TEST_CASE("partial Steiner systems") {
  const auto p = maximal_partial_steiner_check(7, blocks_of({"123", "367", "345", "147", "256"}));
  CHECK(p.independent);
  CHECK(p.maximal);
  CHECK_FALSE(p.maximum);
  const auto f = maximal_partial_steiner_check(7, fano());
  CHECK(f.independent);
  CHECK(f.maximal);
  CHECK(f.maximum);
  const auto one = maximal_partial_steiner_check(7, blocks_of({"123"}));
  CHECK(one.independent);
  CHECK_FALSE(one.maximal);
  CHECK_FALSE(one.maximum);
  const auto dep = maximal_partial_steiner_check(7, blocks_of({"123", "124"}));
  CHECK_FALSE(dep.independent);
  CHECK_THROWS_AS(maximal_partial_steiner_check(7, blocks_of({"123", "12"})), Error);
  CHECK_THROWS_AS(maximal_partial_steiner_check(7, {}), Error);
}

TEST_CASE("every exact equality in the small sweep gives a design") {
  int found = 0;
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : enumerate_connected_graphs(n))
      for (int k = 2; k <= std::min(3, n / 2); ++k) {
        const TokenSet s = maximum_token_set(g, k);
        if (!qbound_attained_exactly(g, k, s.size())) continue;
        ++found;
        CHECK(verify_design(extract_design_from_equality(g, k, s)).valid);
      }
  CHECK(found > 0);
}
