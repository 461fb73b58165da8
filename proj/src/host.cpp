#include "wct/host.hpp"

#include <algorithm>
#include <bit>

#include "wct/error.hpp"

namespace wct {

namespace {

int word_count(int n) {
  // The kernel is instantiated for 1, 2, 4, 8 and 16 words.
  const int raw = (n + 63) / 64;
  return static_cast<int>(std::bit_ceil(static_cast<unsigned>(std::max(raw, 1))));
}

}  // namespace

HostGraph::HostGraph(int n) : n_(n) {
  if (n < 1 || n > kMaxHostVertices) {
    throw Error(errc::cap_exceeded, "host graph order must be in 1.." + std::to_string(kMaxHostVertices) +
                                        ", got " + std::to_string(n));
  }
  words_ = word_count(n);
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
}

HostGraph HostGraph::from_graph(const Graph& g) {
  HostGraph h(g.order());
  for (int v = 0; v < g.order(); ++v) h.rows_[static_cast<std::size_t>(v) * h.words_] = g.neighbors(v);
  return h;
}

int HostGraph::degree(int v) const {
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
  return d;
}

std::size_t HostGraph::edge_count() const {
  std::size_t total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

void HostGraph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw Error(errc::invalid_argument, "bad host edge");
  }
  rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

bool HostGraph::is_independent(const std::vector<int>& s) const {
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (s[a] < 0 || s[a] >= n_) return false;
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (s[a] == s[b] || adjacent(s[a], s[b])) return false;
    }
  }
  return true;
}

bool HostGraph::is_maximal_independent(const std::vector<int>& s) const {
  if (!is_independent(s)) return false;
  std::vector<std::uint64_t> covered(words_, 0);
  for (int v : s) {
    covered[v >> 6] |= std::uint64_t{1} << (v & 63);
    for (int w = 0; w < words_; ++w) covered[w] |= row(v)[w];
  }
  for (int v = 0; v < n_; ++v) {
    if (!((covered[v >> 6] >> (v & 63)) & 1U)) return false;
  }
  return true;
}

HostGraph HostGraph::induced(const std::vector<int>& keep) const {
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw Error(errc::empty_result, "induced subgraph of an empty vertex set");
  HostGraph h(static_cast<int>(sorted.size()));
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      if (adjacent(sorted[a], sorted[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return h;
}

std::string HostGraph::to_graph6() const {
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int j = 1; j < n_; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(adjacent(i, j));
  }
  return graph6_header(n_) + graph6_body(bits);
}

}  // namespace wct
