#include "wct/designs.hpp"

#include <algorithm>
#include <bitset>

#include "wct/combinatorics.hpp"
#include "wct/error.hpp"
#include "wct/independence.hpp"
#include "wct/token.hpp"

namespace wct {

namespace {

constexpr std::size_t kMaxRows = 128;
using RowSet = std::bitset<kMaxRows>;

// Algorithm X over bitsets: rows are k-subsets, columns (k-1)-subsets.
class ExactCover {
 public:
  ExactCover(int n, int k) : rows_(k_subsets(n, k)), cols_(k_subsets(n, k - 1)) {
    col_rows_.resize(cols_.size());
    row_cols_.resize(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for_each_bit(rows_[r], [&](int x) {
        const auto c = static_cast<std::size_t>(colex_rank(rows_[r] & ~bit(x)));
        row_cols_[r].push_back(c);
        col_rows_[c].set(r);
      });
    }
    conflicts_.resize(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t c : row_cols_[r]) conflicts_[r] |= col_rows_[c];
  }

  std::optional<std::vector<Mask>> solve() {
    RowSet avail;
    for (std::size_t r = 0; r < rows_.size(); ++r) avail.set(r);
    std::vector<bool> covered(cols_.size(), false);
    std::vector<std::size_t> chosen;
    if (!search(avail, covered, chosen)) return std::nullopt;
    std::vector<Mask> blocks;
    for (std::size_t r : chosen) blocks.push_back(rows_[r]);
    std::sort(blocks.begin(), blocks.end());
    return blocks;
  }

 private:
  bool search(const RowSet& avail, std::vector<bool>& covered, std::vector<std::size_t>& chosen) {
    std::size_t best = cols_.size();
    std::size_t best_count = kMaxRows + 1;
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (covered[c]) continue;
      const std::size_t cnt = (col_rows_[c] & avail).count();
      if (cnt < best_count) best = c, best_count = cnt;
    }
    if (best == cols_.size()) return true;
    if (best_count == 0) return false;
    const RowSet cand = col_rows_[best] & avail;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!cand.test(r)) continue;
      chosen.push_back(r);
      for (std::size_t c : row_cols_[r]) covered[c] = true;
      if (search(avail & ~conflicts_[r], covered, chosen)) return true;
      for (std::size_t c : row_cols_[r]) covered[c] = false;
      chosen.pop_back();
    }
    return false;
  }

  std::vector<Mask> rows_;
  std::vector<Mask> cols_;
  std::vector<RowSet> col_rows_;
  std::vector<std::vector<std::size_t>> row_cols_;
  std::vector<RowSet> conflicts_;
};

}  // namespace

DesignCheck verify_design(const DesignCertificate& c) {
  if (c.t < 0 || c.t > c.k || c.k > c.v || c.v > kMaxVertices || c.v < 1) {
    throw Error(errc::malformed, "design needs 0 <= t <= k <= v <= 64");
  }
  for (Mask b : c.blocks) {
    if ((b & ~low_bits(c.v)) != 0 || std::popcount(b) != c.k) {
      throw Error(errc::malformed, "block is not a " + std::to_string(c.k) + "-subset of the points");
    }
  }
  DesignCheck r;
  const std::uint64_t per_block = binomial(c.k, c.t);
  const std::uint64_t total = c.lambda * binomial(c.v, c.t);
  if (total % per_block != 0) {
    r.reason = "block count lambda*C(v,t)/C(k,t) is not an integer";
    return r;
  }
  if (c.blocks.size() != total / per_block) {
    r.reason = "expected " + std::to_string(total / per_block) + " blocks, found " + std::to_string(c.blocks.size());
    return r;
  }
  for (Mask s : k_subsets(c.v, c.t)) {
    std::uint64_t count = 0;
    for (Mask b : c.blocks) count += (b & s) == s;
    if (count != c.lambda) {
      r.violating = s;
      r.violating_count = count;
      r.reason = "a t-subset lies in " + std::to_string(count) + " blocks";
      return r;
    }
  }
  r.valid = true;
  return r;
}

bool qbound_attained_exactly(const Graph& g, int k, std::uint64_t token_alpha) {
  const auto alpha = static_cast<std::uint64_t>(independence_number(g).alpha);
  return static_cast<std::uint64_t>(k) * token_alpha == binomial(g.order(), k - 1) * alpha;
}

DesignCertificate extract_design_from_equality(const Graph& g, int k, const TokenSet& s) {
  const int n = g.order();
  if (k < 1 || k > n / 2) throw Error(errc::invalid_argument, "k must satisfy 1 <= k <= n/2");
  for (Mask m : s)
    if (std::popcount(m) != k || (m & ~g.vertices()) != 0) throw Error(errc::invalid_argument, "set member is not a k-subset");
  if (!token_set_independent(g, s)) throw Error(errc::not_independent, "set is not independent in the token graph");
  if (!qbound_attained_exactly(g, k, s.size())) {
    throw Error(errc::bound_not_attained, "set size " + std::to_string(s.size()) + " does not meet the upper bound exactly");
  }
  DesignCertificate c;
  c.v = n;
  c.k = k;
  c.t = k - 1;
  c.lambda = static_cast<std::uint64_t>(independence_number(g).alpha);
  c.blocks = s;
  std::sort(c.blocks.begin(), c.blocks.end());
  const auto check = verify_design(c);
  if (!check.valid) throw Error(errc::invariant_violation, "extremal set is not a design: " + check.reason);
  return c;
}

std::optional<DesignCertificate> johnson_equality(int n, int k) {
  if (k < 1 || k > n / 2) throw Error(errc::invalid_argument, "k must satisfy 1 <= k <= n/2");
  if (binomial(n, k) > kExactCoverBudget) {
    throw Error(errc::cap_exceeded, "C(n,k) exceeds the exact-cover budget of " + std::to_string(kExactCoverBudget));
  }
  std::optional<DesignCertificate> out;
  if (auto blocks = ExactCover(n, k).solve()) {
    DesignCertificate c{n, k, k - 1, 1, std::move(*blocks)};
    if (!verify_design(c).valid) throw Error(errc::invariant_violation, "exact cover produced an invalid design");
    out = std::move(c);
  }
  const std::uint64_t cols = binomial(n, k - 1);
  const auto alpha = static_cast<std::uint64_t>(independence_number(token_graph(complete_graph(n), k).host()).alpha);
  const bool equality = cols % static_cast<std::uint64_t>(k) == 0 && alpha == cols / static_cast<std::uint64_t>(k);
  if (equality != out.has_value()) throw Error(errc::invariant_violation, "design existence disagrees with the exact independence number");
  return out;
}

PartialSteinerCheck maximal_partial_steiner_check(int n, const std::vector<Mask>& blocks) {
  if (n < 1 || n > kMaxVertices) throw Error(errc::malformed, "point count out of range");
  if (blocks.empty()) throw Error(errc::malformed, "no blocks");
  const int k = std::popcount(blocks.front());
  for (Mask b : blocks) {
    if (std::popcount(b) != k || (b & ~low_bits(n)) != 0) throw Error(errc::malformed, "blocks must be equal-size subsets of the points");
  }
  std::vector<Mask> sorted = blocks;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error(errc::malformed, "repeated block");
  const Graph kn = complete_graph(n);
  PartialSteinerCheck r;
  r.independent = token_set_independent(kn, sorted);
  if (!r.independent) return r;
  r.maximal = token_set_maximal(kn, k, sorted);
  r.maximum = r.maximal && static_cast<int>(sorted.size()) == independence_number(token_graph(kn, k).host()).alpha;
  return r;
}

}  // namespace wct
