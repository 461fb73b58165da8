#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wct/graph.hpp"

namespace wct {

/// Largest host the independence kernel accepts (16 words per row).
inline constexpr int kMaxHostVertices = 1024;

/// Bit-row graph of arbitrary order up to kMaxHostVertices. Base graphs and
/// token graphs are both turned into one of these before independence work.
class HostGraph {
 public:
  explicit HostGraph(int n);
  static HostGraph from_graph(const Graph& g);

  int order() const { return n_; }
  int words() const { return words_; }
  const std::uint64_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }
  bool adjacent(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1U; }
  int degree(int v) const;
  std::size_t edge_count() const;

  void add_edge(int u, int v);

  bool is_independent(const std::vector<int>& s) const;
  /// Independent and no outside vertex can be added.
  bool is_maximal_independent(const std::vector<int>& s) const;

  /// Induced subgraph on `keep` (sorted ascending, duplicates ignored).
  HostGraph induced(const std::vector<int>& keep) const;

  std::string to_graph6() const;

  friend bool operator==(const HostGraph&, const HostGraph&) = default;

 private:
  int n_ = 0;
  int words_ = 1;
  std::vector<std::uint64_t> rows_;
};

}  // namespace wct
