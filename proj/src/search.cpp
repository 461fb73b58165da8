#include "wct/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <set>
#include <thread>

#include "wct/bounds.hpp"
#include "wct/canon.hpp"
#include "wct/error.hpp"
#include "wct/family.hpp"
#include "wct/independence.hpp"
#include "wct/json.hpp"
#include "wct/token.hpp"

namespace wct {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct WorkerTally {
  std::map<std::string, std::uint64_t> kills;
  std::uint64_t exact_rejections = 0;
  std::vector<std::string> survivors;
  double filter_time = 0;
  double exact_time = 0;
};

// Name of the first filter that rejects g, if any.
std::optional<std::string> first_rejection(const Graph& g, bool parts) {
  if (!bipartite_exclusion(g, 2)) return "bipartite_exclusion";
  if (!girth_filter(g)) return "girth_filter";
  if (!alpha_filter(g)) return "alpha_filter";
  if (!path_condition_filter(g)) return "path_condition_filter";
  if (parts && !parts_bound_filter(g)) return "parts_bound_filter";
  return std::nullopt;
}

void run_worker(const std::vector<Graph>& graphs, std::size_t begin, std::size_t step, const SearchOptions& o,
                WorkerTally& tally) {
  for (std::size_t i = begin; i < graphs.size(); i += step) {
    const Graph& g = graphs[i];
    if (o.filters && g.order() >= 3 && is_connected(g)) {
      const auto t0 = Clock::now();
      const auto rejected = first_rejection(g, o.parts_filter);
      tally.filter_time += seconds_since(t0);
      if (rejected) {
        ++tally.kills[*rejected];
        if (*rejected == "parts_bound_filter" && well_covered(token_graph(g, 2).host())) {
          throw Error(errc::invariant_violation, "parts filter rejected " + to_graph6(g) + " whose token graph is well-covered");
        }
        continue;
      }
    }
    const auto t1 = Clock::now();
    const bool wc = well_covered(token_graph(g, 2).host());
    tally.exact_time += seconds_since(t1);
    if (wc) tally.survivors.push_back(canonical_form(g));
    else ++tally.exact_rejections;
  }
}

void check_survivor(const std::string& s) {
  const Graph g = from_graph6(s);
  const auto report = is_well_covered(token_graph(g, 2).host(), false);
  if (!report.verdict || !report.enumeration_complete) {
    throw Error(errc::invariant_violation, "survivor " + s + " fails the full well-covered check");
  }
  if (g.order() >= 3 && is_connected(g) && (!girth_filter(g) || !alpha_filter(g))) {
    throw Error(errc::invariant_violation, "survivor " + s + " breaks a necessary condition");
  }
}

std::optional<std::filesystem::path> resolve_cache_dir(const SearchOptions& o) {
  if (o.cache_dir) {
    if (o.cache_dir->empty()) return std::nullopt;
    return o.cache_dir;
  }
  if (const char* env = std::getenv("WCT_CACHE_DIR"); env != nullptr && *env != '\0') return std::filesystem::path(env);
  return std::nullopt;
}

}  // namespace

std::vector<std::string> filter_names(bool parts_filter) {
  std::vector<std::string> out{"bipartite_exclusion", "girth_filter", "alpha_filter", "path_condition_filter"};
  if (parts_filter) out.push_back("parts_bound_filter");
  return out;
}

std::string cache_key(int n, const SearchOptions& o) {
  return "search-v" + std::to_string(kPipelineVersion) + "-n" + std::to_string(n) + (o.filters ? "-filters" : "-nofilters") +
         (o.parts_filter ? "-parts" : "") + (o.include_disconnected ? "-all" : "-connected") + ".json";
}

SearchResult search_order(int n, const SearchOptions& options) {
  if (n < 2 || n > kEnumerateMaxOrder) throw Error(errc::invalid_argument, "search order must be in 2..9");
  const auto cache = resolve_cache_dir(options);
  if (cache) {
    const auto path = *cache / cache_key(n, options);
    if (std::ifstream in(path); in) {
      try {
        SearchResult r = nlohmann::json::parse(in).get<SearchResult>();
        r.from_cache = true;
        return r;
      } catch (const nlohmann::json::exception&) {
        // unreadable entries are recomputed and overwritten
      }
    }
  }

  SearchResult r;
  r.n = n;
  const int jobs = std::max(1, options.jobs);
  const auto t0 = Clock::now();
  const std::vector<Graph> graphs = enumerate_graphs(n, !options.include_disconnected, jobs);
  r.elapsed["enumerate"] = seconds_since(t0);
  r.total_enumerated = graphs.size();

  std::vector<WorkerTally> tallies(static_cast<std::size_t>(jobs));
  if (jobs == 1) {
    run_worker(graphs, 0, 1, options, tallies[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&, t] {
        try {
          run_worker(graphs, static_cast<std::size_t>(t), static_cast<std::size_t>(jobs), options, tallies[t]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (const auto& name : filter_names(options.parts_filter)) r.filter_kill_counts[name] = 0;
  double filter_time = 0, exact_time = 0;
  for (auto& t : tallies) {
    for (auto& [k, v] : t.kills) r.filter_kill_counts[k] += v;
    r.exact_rejections += t.exact_rejections;
    r.survivors.insert(r.survivors.end(), t.survivors.begin(), t.survivors.end());
    filter_time += t.filter_time;
    exact_time += t.exact_time;
  }
  std::sort(r.survivors.begin(), r.survivors.end());
  if (std::adjacent_find(r.survivors.begin(), r.survivors.end()) != r.survivors.end()) {
    throw Error(errc::invariant_violation, "duplicate survivor");
  }
  const auto t2 = Clock::now();
  for (const auto& s : r.survivors) check_survivor(s);
  r.elapsed["filters"] = filter_time;
  r.elapsed["exact"] = exact_time;
  r.elapsed["verify"] = seconds_since(t2);

  std::uint64_t accounted = r.exact_rejections + r.survivors.size();
  for (const auto& [k, v] : r.filter_kill_counts) accounted += v;
  if (accounted != r.total_enumerated) throw Error(errc::invariant_violation, "search tallies do not add up");

  if (cache) {
    std::error_code ec;
    std::filesystem::create_directories(*cache, ec);
    const auto path = *cache / cache_key(n, options);
    const auto tmp = path.string() + ".tmp";
    if (std::ofstream out(tmp); out) {
      out << nlohmann::json(r).dump(1) << "\n";
      out.close();
      std::filesystem::rename(tmp, path, ec);
    }
  }
  return r;
}

CatalogueDiff verify_catalogue(const std::vector<std::string>& survivors, const std::vector<std::string>& expected) {
  std::set<std::string> got;
  for (const auto& s : survivors) got.insert(canonical_form(from_graph6(s)));
  std::set<std::string> want;
  CatalogueDiff d;
  for (const auto& e : expected) {
    const std::string c = canonical_form(from_graph6(e));
    want.insert(c);
    if (!got.count(c)) d.missing.push_back(e);
  }
  for (const auto& c : got)
    if (!want.count(c)) d.unexpected.push_back(c);
  return d;
}

std::vector<std::string> read_graph6_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::io, "cannot read " + path.string());
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

void write_graph6_file(const std::filesystem::path& path, const std::vector<std::string>& records) {
  std::vector<std::string> sorted = records;
  std::sort(sorted.begin(), sorted.end());
  std::ofstream out(path);
  if (!out) throw Error(errc::io, "cannot write " + path.string());
  for (const auto& s : sorted) out << s << "\n";
}

MembershipAudit family_membership_audit(const std::vector<std::string>& survivors) {
  MembershipAudit a;
  for (const auto& s : survivors) {
    const Graph g = from_graph6(s);
    MembershipEntry e;
    e.graph6 = s;
    if (is_complete(g)) {
      e.matched = true;
      e.theorem = "complete";
      e.n = g.order();
    } else {
      for (const auto& split : decompose_two_clique(g)) {
        for (FamilyVariant v : {FamilyVariant::bba, FamilyVariant::bbb}) {
          if (auto st = match_variant(split.split, v)) {
            e.matched = true;
            e.theorem = variant_name(v);
            e.m = split.split.m();
            e.n = split.split.n();
            e.s = st->first;
            e.t = st->second;
            break;
          }
        }
        if (e.matched) break;
      }
    }
    if (!e.matched) a.unmatched.push_back(s);
    a.entries.push_back(std::move(e));
  }
  return a;
}

}  // namespace wct
