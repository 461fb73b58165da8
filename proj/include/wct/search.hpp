#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wct/graph.hpp"

namespace wct {

/// Bumped whenever the pipeline could change a cached result.
inline constexpr int kPipelineVersion = 1;

struct SearchOptions {
  /// Necessary-condition filters before the exact check.
  bool filters = true;
  /// Adds parts_bound_filter after the default filters; each graph it
  /// rejects is also checked exactly and must not be well-covered.
  bool parts_filter = false;
  /// Counts then exceed the connected-only table.
  bool include_disconnected = false;
  int jobs = 1;
  /// Results are stored here and reused; empty disables caching. When
  /// unset, the WCT_CACHE_DIR environment variable is consulted.
  std::optional<std::filesystem::path> cache_dir;
};

struct SearchResult {
  int n = 0;
  std::uint64_t total_enumerated = 0;
  /// Graphs removed by each filter (first failing filter only).
  std::map<std::string, std::uint64_t> filter_kill_counts;
  /// Graphs that passed every filter but failed the exact check.
  std::uint64_t exact_rejections = 0;
  /// Sorted canonical graph6.
  std::vector<std::string> survivors;
  /// Seconds per stage; filter and exact stages sum worker time.
  std::map<std::string, double> elapsed;
  bool from_cache = false;
};

/// Filter names in pipeline order.
std::vector<std::string> filter_names(bool parts_filter);

/// Every graph of order n (connected unless asked otherwise), up to
/// isomorphism, whose 2-token graph is well-covered. Needs 2 <= n <= 9.
SearchResult search_order(int n, const SearchOptions& options = {});

/// Cache file name for (n, options).
std::string cache_key(int n, const SearchOptions& options);

struct CatalogueDiff {
  /// Expected graphs the search did not produce (as given).
  std::vector<std::string> missing;
  /// Survivors absent from the expected list (canonical).
  std::vector<std::string> unexpected;
  bool empty() const { return missing.empty() && unexpected.empty(); }
};

/// Compares up to isomorphism. Throws graph6 errors on bad input.
CatalogueDiff verify_catalogue(const std::vector<std::string>& survivors, const std::vector<std::string>& expected);

/// graph6 records of a file, one per line; blank lines and lines starting
/// with '#' are skipped. Throws io when unreadable.
std::vector<std::string> read_graph6_file(const std::filesystem::path& path);

/// Sorted records, one per line.
void write_graph6_file(const std::filesystem::path& path, const std::vector<std::string>& records);

struct MembershipEntry {
  std::string graph6;
  bool matched = false;
  /// "complete", "bba" or "bbb".
  std::string theorem;
  int m = 0;
  int n = 0;
  int s = 0;
  int t = 0;
};

struct MembershipAudit {
  std::vector<MembershipEntry> entries;
  std::vector<std::string> unmatched;
};

/// Matches each graph to K_n or, through some split into two cliques, to
/// the bba or bbb template.
MembershipAudit family_membership_audit(const std::vector<std::string>& survivors);

}  // namespace wct
