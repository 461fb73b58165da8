#include "wct/constructions.hpp"

#include <algorithm>
#include <map>

#include "wct/combinatorics.hpp"
#include "wct/error.hpp"
#include "wct/independence.hpp"
#include "wct/token.hpp"

namespace wct {

namespace {

std::string set_text(VertexSet s) {
  std::string out = "{";
  for (int v : s.members()) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

void require_independent(const Graph& g, VertexSet s) {
  if ((s.bits() & ~g.vertices()) != 0) throw Error(errc::invalid_argument, "set " + set_text(s) + " exceeds graph order");
  if (!g.is_independent(s.bits())) throw Error(errc::not_independent, "set " + set_text(s) + " is not independent");
}

// All pairs {x, y} with x ∈ a, y ∈ b, x ≠ y.
void add_pairs(TokenSet& out, Mask a, Mask b) {
  for_each_bit(a, [&](int x) {
    for_each_bit(b & ~bit(x), [&](int y) { out.push_back(bit(x) | bit(y)); });
  });
}

void normalize(TokenSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

void require_token_independent(const Graph& g, const TokenSet& s, const char* what) {
  if (!token_set_independent(g, s)) {
    throw Error(errc::invariant_violation, std::string(what) + " produced a dependent token set");
  }
}

void require_token_maximal(const Graph& g, const TokenSet& s, const char* what) {
  if (!token_set_maximal(g, 2, s)) {
    throw Error(errc::invariant_violation, std::string(what) + " produced a non-maximal token set");
  }
}

Edge ordered(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

int part_of(const IndependentPartition& p, int v) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.parts()[i].contains(v)) return static_cast<int>(i);
  return -1;
}

// Two kept edges sharing an endpoint must not span a triangle.
bool triangle_free_with(const Graph& g, const std::vector<Edge>& kept, Edge e) {
  for (Edge f : kept) {
    int shared = -1, x = -1, y = -1;
    if (f.first == e.first) shared = f.first, x = f.second, y = e.second;
    else if (f.first == e.second) shared = f.first, x = f.second, y = e.first;
    else if (f.second == e.first) shared = f.second, x = f.first, y = e.second;
    else if (f.second == e.second) shared = f.second, x = f.first, y = e.first;
    if (shared >= 0 && x != y && g.adjacent(x, y)) return false;
  }
  return true;
}

}  // namespace

VertexSet phi(const Graph& g, VertexSet a, VertexSet b) {
  require_independent(g, a);
  require_independent(g, b);
  if ((a & b).bits() != 0) throw Error(errc::overlapping_parts, "phi needs disjoint sets");
  Mask out = 0;
  for_each_bit(a.bits(), [&](int x) {
    if ((g.neighbors(x) & b.bits()) == 0) out |= bit(x);
  });
  return VertexSet(out);
}

IndependentPartition::IndependentPartition(const Graph& g, std::vector<VertexSet> parts) : parts_(std::move(parts)) {
  Mask seen = 0;
  for (VertexSet s : parts_) {
    if (s.empty()) throw Error(errc::invalid_argument, "partition has an empty part");
    require_independent(g, s);
    if ((seen & s.bits()) != 0) throw Error(errc::overlapping_parts, "partition parts overlap at " + set_text(s));
    seen |= s.bits();
  }
  if (seen != g.vertices()) throw Error(errc::invalid_argument, "partition does not cover every vertex");

  for (std::size_t i = 0; i < parts_.size() && !violation_; ++i) {
    for (std::size_t j = i + 1; j < parts_.size() && !violation_; ++j) {
      const VertexSet f = phi(g, parts_[j], parts_[i]);
      if (!f.empty()) {
        violation_ = PhiViolation{static_cast<int>(j), static_cast<int>(i), std::countr_zero(f.bits())};
      }
    }
  }

  maximum_greedy_ = true;
  Mask rest = g.vertices();
  for (VertexSet s : parts_) {
    if (s.size() != independence_number_within(g, rest)) {
      maximum_greedy_ = false;
      break;
    }
    rest &= ~s.bits();
  }
}

TokenSet product_set(const Graph& g, const std::vector<VertexSet>& sets) {
  if (sets.empty()) throw Error(errc::invalid_argument, "product needs at least one set");
  for (VertexSet s : sets) require_independent(g, s);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (sets[i] != sets[j] && !(sets[i] & sets[j]).empty()) {
        throw Error(errc::overlapping_parts, "parts " + set_text(sets[i]) + " and " + set_text(sets[j]) +
                                                 " are neither equal nor disjoint");
      }
    }
  }
  TokenSet out;
  auto rec = [&](auto&& self, std::size_t i, Mask chosen) -> void {
    if (i == sets.size()) {
      out.push_back(chosen);
      return;
    }
    for_each_bit(sets[i].bits() & ~chosen, [&](int x) { self(self, i + 1, chosen | bit(x)); });
  };
  rec(rec, 0, 0);
  normalize(out);
  require_token_independent(g, out, "product_set");
  return out;
}

std::uint64_t product_cardinality(const std::vector<VertexSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (sets[i] != sets[j] && !(sets[i] & sets[j]).empty()) {
        throw Error(errc::overlapping_parts, "parts are neither equal nor disjoint");
      }
    }
  }
  std::map<Mask, int> multiplicity;
  for (VertexSet s : sets) ++multiplicity[s.bits()];
  std::uint64_t total = 1;
  for (auto [m, a] : multiplicity) total *= binomial(std::popcount(m), a);
  return total;
}

TokenSet pairing_independent_set(const Graph& g, const std::vector<VertexSet>& sets) {
  Mask seen = 0;
  for (VertexSet s : sets) {
    require_independent(g, s);
    if ((seen & s.bits()) != 0) throw Error(errc::overlapping_parts, "pairing needs disjoint sets");
    seen |= s.bits();
  }
  TokenSet out;
  std::size_t i = 0;
  for (; i + 1 < sets.size(); i += 2) add_pairs(out, sets[i].bits(), sets[i + 1].bits());
  if (i < sets.size()) add_pairs(out, sets[i].bits(), sets[i].bits());
  normalize(out);
  require_token_independent(g, out, "pairing_independent_set");
  return out;
}

TokenSet maximal_from_partition(const Graph& g, const IndependentPartition& p) {
  if (const auto& v = p.first_violation()) {
    throw Error(errc::phi_cascade, "phi(V_" + std::to_string(v->later + 1) + ", V_" + std::to_string(v->earlier + 1) +
                                       ") contains vertex " + std::to_string(v->vertex));
  }
  const auto& parts = p.parts();
  TokenSet out;
  std::size_t i = 0;
  for (; i + 1 < parts.size(); i += 2) {
    add_pairs(out, parts[i].bits(), parts[i + 1].bits());
    const Mask f = phi(g, parts[i], parts[i + 1]).bits();
    add_pairs(out, f, f);
  }
  if (i < parts.size()) add_pairs(out, parts[i].bits(), parts[i].bits());
  normalize(out);
  require_token_maximal(g, out, "maximal_from_partition");
  return out;
}

bool edge_isolated_between_parts(const Graph& g, const IndependentPartition& p, Edge e) {
  if (!g.adjacent(e.first, e.second)) return false;
  const int i = part_of(p, e.first);
  const int j = part_of(p, e.second);
  const Mask vi = p.parts()[i].bits();
  const Mask vj = p.parts()[j].bits();
  return (g.neighbors(e.first) & vj) == bit(e.second) && (g.neighbors(e.second) & vi) == bit(e.first);
}

std::vector<Edge> greedy_part_edges(const Graph& g, const IndependentPartition& p) {
  std::vector<Edge> kept;
  for (Edge e : g.edges()) {
    if (edge_isolated_between_parts(g, p, e) && triangle_free_with(g, kept, e)) kept.push_back(e);
  }
  return kept;
}

TokenSet maximal_from_coloring_edges(const Graph& g, const IndependentPartition& p,
                                     const std::optional<std::vector<Edge>>& edges) {
  if (const auto& v = p.first_violation()) {
    throw Error(errc::phi_cascade, "phi(V_" + std::to_string(v->later + 1) + ", V_" + std::to_string(v->earlier + 1) +
                                       ") contains vertex " + std::to_string(v->vertex));
  }
  std::vector<Edge> chosen;
  if (edges) {
    for (Edge e : *edges) {
      e = ordered(e);
      if (e.first < 0 || e.second >= g.order() || !g.adjacent(e.first, e.second)) {
        throw Error(errc::edge_condition, "{" + std::to_string(e.first) + "," + std::to_string(e.second) +
                                              "} is not an edge");
      }
      if (!edge_isolated_between_parts(g, p, e)) {
        throw Error(errc::edge_condition, "edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                                              "} is not isolated between its parts");
      }
      if (!triangle_free_with(g, chosen, e)) {
        throw Error(errc::edge_condition, "edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                                              "} closes a triangle with another chosen edge");
      }
      if (std::find(chosen.begin(), chosen.end(), e) == chosen.end()) chosen.push_back(e);
    }
    for (Edge e : g.edges()) {
      if (std::find(chosen.begin(), chosen.end(), e) != chosen.end()) continue;
      if (edge_isolated_between_parts(g, p, e) && triangle_free_with(g, chosen, e)) {
        throw Error(errc::not_maximal, "edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                                           "} could still be added");
      }
    }
  } else {
    chosen = greedy_part_edges(g, p);
  }
  TokenSet out;
  for (VertexSet s : p.parts()) add_pairs(out, s.bits(), s.bits());
  for (Edge e : chosen) out.push_back(bit(e.first) | bit(e.second));
  normalize(out);
  require_token_maximal(g, out, "maximal_from_coloring_edges");
  return out;
}

VertexSet least_maximum_independent_set(const Graph& g, Mask within) {
  const int target = independence_number_within(g, within);
  Mask chosen = 0;
  Mask cand = within;
  int have = 0;
  for_each_bit(within, [&](int v) {
    if (have == target || !((cand >> v) & 1U)) return;
    const Mask rest = cand & ~g.closed_neighbors(v) & ~low_bits(v + 1);
    if (have + 1 + independence_number_within(g, rest) == target) {
      chosen |= bit(v);
      ++have;
      cand = rest;
    } else {
      cand &= ~bit(v);
    }
  });
  return VertexSet(chosen);
}

IndependentPartition greedy_partition(const Graph& g, GreedyMode mode) {
  std::vector<VertexSet> parts;
  Mask rest = g.vertices();
  while (rest != 0) {
    Mask part = 0;
    if (mode == GreedyMode::maximum) {
      part = least_maximum_independent_set(g, rest).bits();
    } else {
      Mask cand = rest;
      while (cand != 0) {
        const int v = std::countr_zero(cand);
        part |= bit(v);
        cand &= ~g.closed_neighbors(v);
      }
    }
    parts.emplace_back(part);
    rest &= ~part;
  }
  return IndependentPartition(g, std::move(parts));
}

std::vector<IndependentPartition> all_maximum_greedy_partitions(const Graph& g) {
  if (g.order() > 10) throw Error(errc::cap_exceeded, "partition enumeration supports n <= 10");
  std::vector<IndependentPartition> out;
  std::vector<VertexSet> parts;
  auto rec = [&](auto&& self, Mask rest) -> void {
    if (rest == 0) {
      out.emplace_back(g, parts);
      return;
    }
    const auto sub = induced_subgraph(g, VertexSet(rest));
    std::vector<int> back;
    for_each_bit(rest, [&](int v) { back.push_back(v); });
    const int alpha = independence_number_within(g, rest);
    for (const auto& s : maximal_independent_sets(sub.graph)) {
      if (static_cast<int>(s.size()) != alpha) continue;
      Mask part = 0;
      for (int v : s) part |= bit(back[v]);
      parts.emplace_back(part);
      self(self, rest & ~part);
      parts.pop_back();
    }
  };
  rec(rec, g.vertices());
  return out;
}

EdgeSetResult edge_set_independent_set(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if ((g.neighbors(u) & g.neighbors(v)) != 0) {
      throw Error(errc::precondition, "graph has a triangle on edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
  }
  EdgeSetResult r;
  for (auto [u, v] : g.edges()) r.set.push_back(bit(u) | bit(v));
  normalize(r.set);
  require_token_independent(g, r.set, "edge_set_independent_set");
  r.maximal = token_set_maximal(g, 2, r.set);
  return r;
}

TokenSet hybrid_independent_set(const Graph& g, const HybridRecipe& recipe) {
  TokenSet out;
  for (auto [a, b] : recipe.products) {
    require_independent(g, a);
    require_independent(g, b);
    if (a != b && !(a & b).empty()) throw Error(errc::overlapping_parts, "product parts overlap");
    add_pairs(out, a.bits(), b.bits());
  }
  for (Edge e : recipe.edges) {
    e = ordered(e);
    if (e.first < 0 || e.second >= g.order() || !g.adjacent(e.first, e.second)) {
      throw Error(errc::edge_condition, "recipe edge is not an edge of the graph");
    }
    out.push_back(bit(e.first) | bit(e.second));
  }
  normalize(out);
  if (!token_set_independent(g, out)) throw Error(errc::not_independent, "recipe does not give an independent set");
  return out;
}

HybridRecipe petersen_hybrid_recipe() {
  const VertexSet u1{5, 8, 9}, u2{0, 2, 6}, u3{3}, u4{4}, u5{1}, u6{7};
  return {{{u1, u1}, {u2, u2}, {u3, u4}, {u5, u6}},
          {{3, 9}, {2, 3}, {0, 4}, {4, 5}, {1, 5}, {1, 2}, {0, 7}, {7, 9}}};
}

}  // namespace wct
