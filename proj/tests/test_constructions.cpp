#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "wct/canon.hpp"
#include "wct/constructions.hpp"
#include "wct/error.hpp"
#include "wct/independence.hpp"
#include "wct/token.hpp"

using namespace wct;

namespace {

// Labels 1..6 shifted to 0..5.
Graph kite() { return Graph::from_edges(6, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 5}, {3, 4}}); }

VertexSet one_based(std::initializer_list<int> labels) {
  Mask m = 0;
  for (int v : labels) m |= bit(v - 1);
  return VertexSet(m);
}

Mask pair(int a, int b) { return bit(a) | bit(b); }
Mask pair1(int a, int b) { return bit(a - 1) | bit(b - 1); }

TokenSet sorted(TokenSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

std::string error_code(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

// Token set as a vertex list of the host T_2(g).
IndependentSet as_host_set(const TokenGraph& t, const TokenSet& s) {
  IndependentSet out;
  for (Mask m : s) out.push_back(static_cast<int>(t.index_of(m)));
  std::sort(out.begin(), out.end());
  return out;
}

IndependentPartition petersen_parts(const Graph& p) {
  return IndependentPartition(p, {VertexSet{0, 1, 9}, VertexSet{2, 5, 7}, VertexSet{4, 6}, VertexSet{3, 8}});
}

}  // namespace

TEST_CASE("phi") {
  Graph g = kite();
  CHECK(phi(g, one_based({1, 3, 5, 6}), one_based({2})) == one_based({5, 6}));
  CHECK(phi(g, one_based({1, 3, 5, 6}), VertexSet{}) == one_based({1, 3, 5, 6}));
  Graph p = petersen_graph();
  CHECK(phi(p, VertexSet{0, 1, 9}, VertexSet{2, 5, 7}).empty());
  CHECK(error_code([&] { phi(g, one_based({1, 2}), one_based({5})); }) == errc::not_independent);
  CHECK(error_code([&] { phi(g, one_based({1, 5}), one_based({5})); }) == errc::overlapping_parts);
}

TEST_CASE("product sets") {
  Graph c4 = cycle_graph(4);
  auto s = product_set(c4, {VertexSet{0, 2}, VertexSet{1, 3}});
  CHECK(s.size() == 4);
  CHECK(token_set_independent(c4, s));

  Graph k = complete_bipartite_graph(4, 4);
  const VertexSet w{0, 1, 2, 3};
  CHECK(product_set(k, {w, w}).size() == 6);
  CHECK(product_cardinality({w, w}) == 6);
  CHECK(product_set(k, {w, w, w}).size() == 4);
  for (int m = 2; m <= 4; ++m) {
    Graph km = complete_bipartite_graph(m, m);
    const VertexSet left(low_bits(m)), right(low_bits(m) << m);
    CHECK(product_cardinality({left, right}) == static_cast<std::uint64_t>(m * m));
    CHECK(static_cast<int>(product_cardinality({left, right})) <=
          independence_number(token_graph(km, 2).host()).alpha);
  }

  CHECK(product_set(complete_graph(2), {VertexSet{0}, VertexSet{0}}).empty());
  CHECK(error_code([&] { product_set(c4, {VertexSet{0, 1}}); }) == errc::not_independent);
  CHECK(error_code([&] { product_set(path_graph(5), {VertexSet{0, 2}, VertexSet{2, 4}}); }) ==
        errc::overlapping_parts);
}

TEST_CASE("product size equals product cardinality") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 6);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 4 == 0) g.add_edge(u, v);
    auto parts = greedy_partition(g, GreedyMode::maximal).parts();
    std::vector<VertexSet> sets;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) sets.push_back(parts[rng() % parts.size()]);
    auto s = product_set(g, sets);
    CHECK(s.size() == product_cardinality(sets));
    for (Mask m : s) CHECK(std::popcount(m) == k);
  }
}

TEST_CASE("partition flags") {
  Graph g = kite();
  IndependentPartition p(g, {one_based({1, 3, 5, 6}), one_based({2}), one_based({4})});
  CHECK(p.phi_cascade());
  IndependentPartition q(g, {one_based({2}), one_based({1, 3, 5, 6}), one_based({4})});
  CHECK_FALSE(q.phi_cascade());
  REQUIRE(q.first_violation().has_value());
  CHECK(q.first_violation()->earlier == 0);
  CHECK(q.first_violation()->later == 1);
  CHECK(error_code([&] { maximal_from_partition(g, q); }) == errc::phi_cascade);
  CHECK(error_code([&] { IndependentPartition(g, {one_based({1, 3, 5, 6}), one_based({2})}); }) ==
        errc::invalid_argument);
  CHECK(error_code([&] { IndependentPartition(g, {one_based({1, 2, 5, 6}), one_based({3}), one_based({4})}); }) ==
        errc::not_independent);
}

TEST_CASE("partition-based maximal sets on the six-vertex example") {
  Graph g = kite();
  auto h1 = maximal_from_partition(g, IndependentPartition(g, {one_based({1, 3, 5, 6}), one_based({2}), one_based({4})}));
  CHECK(h1 == sorted({pair1(1, 2), pair1(2, 3), pair1(2, 5), pair1(2, 6), pair1(5, 6)}));

  auto h2 = maximal_from_partition(g, IndependentPartition(g, {one_based({2, 5, 6}), one_based({1, 4}), one_based({3})}));
  CHECK(h2 == sorted({pair1(1, 2), pair1(1, 5), pair1(1, 6), pair1(2, 4), pair1(4, 5), pair1(4, 6)}));

  auto h3 = maximal_from_partition(g, IndependentPartition(g, {one_based({2, 5, 6}), one_based({1, 3}), one_based({4})}));
  CHECK(h3 == sorted({pair1(1, 2), pair1(1, 5), pair1(1, 6), pair1(2, 3), pair1(3, 5), pair1(3, 6), pair1(5, 6)}));

  for (const auto& h : {h1, h2, h3}) CHECK(token_set_maximal(g, 2, h));
}

TEST_CASE("Petersen constructions") {
  Graph p = petersen_graph();
  auto parts = petersen_parts(p);
  CHECK(parts.phi_cascade());

  auto thirteen = maximal_from_partition(p, parts);
  CHECK(thirteen.size() == 13);
  CHECK(thirteen == pairing_independent_set(p, parts.parts()));

  auto fourteen = maximal_from_coloring_edges(p, parts, std::vector<Edge>{{0, 4}, {4, 3}, {3, 9}, {9, 6}, {6, 8}, {0, 8}});
  CHECK(fourteen.size() == 14);
  CHECK(maximal_from_coloring_edges(p, parts) == fourteen);

  auto fifteen = edge_set_independent_set(p);
  CHECK(fifteen.set.size() == 15);
  CHECK(fifteen.maximal);

  auto sixteen = hybrid_independent_set(p, petersen_hybrid_recipe());
  CHECK(sixteen.size() == 16);
  CHECK(token_set_maximal(p, 2, sixteen));

  TokenGraph t = token_graph(p, 2);
  HostGraph h = t.host();
  for (const TokenSet* s : {&thirteen, &fourteen, &fifteen.set, &sixteen}) CHECK(h.is_maximal_independent(as_host_set(t, *s)));
}

TEST_CASE("edge list conditions") {
  Graph p = petersen_graph();
  auto parts = petersen_parts(p);
  CHECK(error_code([&] { maximal_from_coloring_edges(p, parts, std::vector<Edge>{{0, 4}}); }) == errc::not_maximal);
  CHECK(error_code([&] { maximal_from_coloring_edges(p, parts, std::vector<Edge>{{0, 1}}); }) == errc::edge_condition);
  // 1-2 is not isolated: 1 ∈ V_1 has neighbours 2 and 7 in V_2.
  CHECK(error_code([&] { maximal_from_coloring_edges(p, parts, std::vector<Edge>{{1, 2}}); }) == errc::edge_condition);

  Graph k3 = complete_graph(3);
  IndependentPartition singles(k3, {VertexSet{0}, VertexSet{1}, VertexSet{2}});
  auto s = maximal_from_coloring_edges(k3, singles);
  CHECK(s == TokenSet{pair(0, 1)});
  CHECK(error_code([&] { maximal_from_coloring_edges(k3, singles, std::vector<Edge>{{0, 1}, {0, 2}}); }) ==
        errc::edge_condition);
}

TEST_CASE("greedy partitions") {
  for (auto mode : {GreedyMode::maximum, GreedyMode::maximal}) {
    auto p = greedy_partition(complete_graph(5), mode);
    CHECK(p.size() == 5);
    CHECK(p.phi_cascade());
  }
  auto c5 = greedy_partition(cycle_graph(5), GreedyMode::maximum);
  REQUIRE(c5.size() == 3);
  CHECK(c5.parts()[0].size() == 2);
  CHECK(c5.parts()[1].size() == 2);
  CHECK(c5.parts()[2].size() == 1);
  CHECK(c5.maximum_greedy());

  auto kp = greedy_partition(kite(), GreedyMode::maximal);
  REQUIRE(kp.size() == 3);
  CHECK(kp.parts()[0] == one_based({1, 3, 5, 6}));
  CHECK(kp.parts()[1] == one_based({2}));
  CHECK(kp.parts()[2] == one_based({4}));

  // Every maximum-greedy partition of C_7 has part sizes 3, 3, 1.
  auto c7 = all_maximum_greedy_partitions(cycle_graph(7));
  CHECK(c7.size() == 7 * 2);
  for (const auto& p : c7) {
    REQUIRE(p.size() == 3);
    CHECK(p.parts()[0].size() == 3);
    CHECK(p.parts()[1].size() == 3);
    CHECK(p.parts()[2].size() == 1);
    CHECK(p.maximum_greedy());
  }
}

TEST_CASE("least maximum independent set is lexicographically least") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    std::vector<std::vector<int>> maxima;
    const int alpha = independence_number(g).alpha;
    for (const auto& s : maximal_independent_sets(g))
      if (static_cast<int>(s.size()) == alpha) maxima.push_back(s);
    CHECK(least_maximum_independent_set(g, g.vertices()).members() == *std::min_element(maxima.begin(), maxima.end()));
  }
}

TEST_CASE("constructions give maximal sets on all small graphs") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      TokenGraph t = token_graph(g, 2);
      HostGraph h = t.host();
      std::set<IndependentSet> stream;
      const bool small = n <= 6;
      if (small)
        for (const auto& s : maximal_independent_sets(h)) stream.insert(s);
      for (auto mode : {GreedyMode::maximal, GreedyMode::maximum}) {
        auto p = greedy_partition(g, mode);
        CHECK(p.phi_cascade());
        if (mode == GreedyMode::maximum) CHECK(p.maximum_greedy());
        auto a = as_host_set(t, maximal_from_partition(g, p));
        auto b = as_host_set(t, maximal_from_coloring_edges(g, p));
        CHECK(h.is_maximal_independent(a));
        CHECK(h.is_maximal_independent(b));
        if (small) {
          CHECK(stream.count(a) == 1);
          CHECK(stream.count(b) == 1);
        }
        for (std::size_t i = 0; i < p.size(); ++i)
          for (std::size_t j = 0; j < p.size(); ++j) {
            if (i == j) continue;
            const VertexSet f = phi(g, p.parts()[i], p.parts()[j]);
            CHECK((f - p.parts()[i]).empty());
            for (int x : f.members()) CHECK(g.is_independent(p.parts()[j].bits() | bit(x)));
          }
      }
    }
  }
}

TEST_CASE("triangle-free edge sets on small graphs") {
  int checked = 0;
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      bool triangle = false;
      for (auto [u, v] : g.edges()) triangle = triangle || (g.neighbors(u) & g.neighbors(v)) != 0;
      if (triangle) {
        CHECK(error_code([&] { edge_set_independent_set(g); }) == errc::precondition);
        continue;
      }
      auto r = edge_set_independent_set(g);
      TokenGraph t = token_graph(g, 2);
      CHECK(t.host().is_independent(as_host_set(t, r.set)));
      CHECK(r.maximal == t.host().is_maximal_independent(as_host_set(t, r.set)));
      ++checked;
    }
  }
  CHECK(checked > 0);
}
