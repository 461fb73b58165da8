#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wct/graph.hpp"

namespace wct {

/// Largest order accepted by the canonical labeller.
inline constexpr int kCanonMaxOrder = 16;

struct CanonicalLabeling {
  Graph graph;             ///< the canonical relabelling of the input
  std::vector<int> label;  ///< label[v] = position of input vertex v in `graph`
};

/// Individualization-refinement over equitable partitions. Branches only on
/// one representative per twin class of the target cell, which keeps highly
/// symmetric inputs (complete, complete multipartite) cheap. Among all leaves
/// the relabelling with the lexicographically largest graph6 bit string wins.
CanonicalLabeling canonical_labeling(const Graph& g);

/// graph6 of the canonical relabelling; equal strings iff isomorphic.
std::string canonical_form(const Graph& g);

/// One representative per isomorphism class of simple graphs of order n
/// (1 <= n <= 9), generated by canonical augmentation: a child obtained by
/// appending a vertex is kept only when deleting its canonical deletion
/// vertex gives back the parent class. Children of one parent are produced
/// in increasing neighbour-mask order, and parents in stream order, so the
/// output is deterministic. Representatives are returned in canonical form.
std::vector<Graph> enumerate_graphs(int n, bool connected_only, int jobs = 1);

inline std::vector<Graph> enumerate_connected_graphs(int n, int jobs = 1) {
  return enumerate_graphs(n, true, jobs);
}

inline constexpr int kEnumerateMaxOrder = 9;

}  // namespace wct
