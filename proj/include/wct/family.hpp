#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wct/graph.hpp"

namespace wct {

/// K_m ⊔ K_n plus cross edges. Graph vertices 0..m-1 are the small clique
/// X, m..m+n-1 the large clique Y. A cross pair (i, j) joins x_i and y_j,
/// both 0-based within their clique.
class TwoCliqueGraph {
 public:
  int m() const { return m_; }
  int n() const { return n_; }
  /// Sorted, duplicate-free.
  const std::vector<std::pair<int, int>>& cross() const { return cross_; }
  const Graph& graph() const { return graph_; }

  int x_vertex(int i) const { return i; }
  int y_vertex(int j) const { return m_ + j; }
  /// Y neighbours of x_i as a bitmask over 0..n-1.
  Mask y_neighbors(int i) const;
  /// X neighbours of y_j as a bitmask over 0..m-1.
  Mask x_neighbors(int j) const;
  /// Members of Y with at least one neighbour in X.
  int attached_y_count() const;

  friend TwoCliqueGraph build_two_clique(int m, int n, std::vector<std::pair<int, int>> cross);

 private:
  TwoCliqueGraph(int m, int n) : m_(m), n_(n), graph_(m + n) {}
  int m_;
  int n_;
  std::vector<std::pair<int, int>> cross_;
  Graph graph_;
};

/// Throws invalid_argument unless 1 <= m <= n, m + n <= 64 and every pair
/// is in range.
TwoCliqueGraph build_two_clique(int m, int n, std::vector<std::pair<int, int>> cross);

/// floor(m/2) + floor(n/2) + m when at most n - m members of Y touch X.
std::optional<int> alpha_formula(const TwoCliqueGraph& g);

enum class ForbiddenRule { even_order, zigzag, three_stripes, equal_single_edge };
std::string rule_name(ForbiddenRule r);

struct ForbiddenFinding {
  ForbiddenRule rule;
  /// Roles as graph vertices: even_order lists the attached Y vertices;
  /// zigzag gives x1, x2, y1, y2; three_stripes x1, y1, x2, y2, x3, y3;
  /// equal_single_edge x1, y1.
  std::vector<int> witness;
};

/// Every forbidden configuration whose side conditions hold. Any finding
/// means T_2 is not well-covered.
std::vector<ForbiddenFinding> detect_forbidden(const TwoCliqueGraph& g);

enum class FamilyVariant { bba, bbb, bbc };
std::string variant_name(FamilyVariant v);
std::optional<FamilyVariant> variant_from_name(const std::string& s);

/// Cross edges:
///   bba: y_1 to x_1..x_s, y_2 to x_{s+1}..x_{s+t};
///   bbb: x_1 to y_1..y_s, x_2 to y_{s+1}..y_{s+t};
///   bbc: x_1 to y_2..y_{t+1}, y_1 to x_2..x_{s+1}.
/// Throws precondition naming the violated constraint (n > m, both odd,
/// s, t >= 0 and the variant's bound on s and t).
TwoCliqueGraph build_wellcovered_family(FamilyVariant v, int m, int n, int s, int t);

enum class Verdict { well_covered_by_theorem, not_well_covered_by_theorem, undecided };
std::string verdict_name(Verdict v);

struct Classification {
  Verdict verdict = Verdict::undecided;
  /// "complete", a variant name or a forbidden rule name.
  std::string theorem;
  /// Star sizes when a variant matched.
  int s = 0;
  int t = 0;
  std::vector<ForbiddenFinding> findings;
  /// Exact check of T_2, present when m + n <= exact_limit.
  std::optional<bool> exact;
};

/// Forbidden configurations first, then the complete graph and the three
/// well-covered templates (up to relabelling inside each clique).
Classification classify_two_clique(const TwoCliqueGraph& g, int exact_limit = 10);

/// The (s, t) for which g is the variant's template up to relabelling
/// inside each clique, if any.
std::optional<std::pair<int, int>> match_variant(const TwoCliqueGraph& g, FamilyVariant v);

struct TwoCliqueSplit {
  TwoCliqueGraph split;
  /// split vertex -> vertex of the input graph
  std::vector<int> origin;
};

/// Every way to write V(g) as a clique X and a clique Y with |X| <= |Y|,
/// X nonempty. Throws cap_exceeded beyond 20 vertices.
std::vector<TwoCliqueSplit> decompose_two_clique(const Graph& g);

}  // namespace wct
