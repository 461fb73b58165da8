#include "wct/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "wct/bounds.hpp"
#include "wct/constructions.hpp"
#include "wct/designs.hpp"
#include "wct/error.hpp"
#include "wct/family.hpp"
#include "wct/independence.hpp"
#include "wct/json.hpp"
#include "wct/search.hpp"
#include "wct/token.hpp"

namespace wct {

namespace {

struct Input {
  Graph graph;
  std::string source;
  int label_base = 0;
};

struct Common {
  std::vector<std::string> graphs;
  std::vector<std::string> files;
  std::string format = "json";
  int jobs = 1;
  std::size_t cap = kDefaultTokenCap;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string labels_name(int base) { return base == 1 ? "1-based" : "0-based"; }

// Named graphs keep their figure labels: 1-based except the Petersen graph.
int named_label_base(const std::string& spec) { return spec.rfind("petersen", 0) == 0 ? 0 : 1; }

std::vector<Input> gather_inputs(const Common& c, std::istream& in) {
  std::vector<Input> out;
  for (const auto& spec : c.graphs) out.push_back({named_graph_from_spec(spec), spec, named_label_base(spec)});
  for (const auto& file : c.files)
    for (const auto& rec : read_graph6_file(file)) out.push_back({from_graph6(rec), rec, 0});
  if (c.graphs.empty() && c.files.empty()) {
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      out.push_back({from_graph6(line), line, 0});
    }
  }
  return out;
}

json error_json(const std::string& code, const std::string& message) { return json{{"error", code}, {"message", message}}; }

// Runs fn on every input (strided over jobs workers) and prints results in
// input order. A failing input gets a diagnostic line; the exit code is 1.
int for_each_input(const std::vector<Input>& inputs, int jobs, std::ostream& out, std::ostream& err,
                   const std::function<std::string(const Input&)>& fn) {
  std::vector<std::string> results(inputs.size());
  std::vector<std::optional<json>> failures(inputs.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < inputs.size(); i += step) {
      try {
        results[i] = fn(inputs[i]);
      } catch (const Error& e) {
        json d = error_json(e.code(), e.what());
        d["input"] = inputs[i].source;
        failures[i] = d;
      }
    }
  };
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(inputs.size())));
  if (jobs <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work, static_cast<std::size_t>(t), static_cast<std::size_t>(jobs));
    for (auto& th : pool) th.join();
  }
  int code = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (failures[i]) {
      err << failures[i]->dump() << "\n";
      code = 1;
    } else {
      out << results[i];
    }
  }
  return code;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("format '" + format + "' is not supported here");
}

json base_json(const Input& in) { return json{{"input", in.source}, {"labels", labels_name(in.label_base)}, {"n", in.graph.order()}}; }

json vertex_labels(Mask m, int base) {
  json a = json::array();
  for_each_bit(m, [&](int v) { a.push_back(v + base); });
  return a;
}

json subset_labels(const TokenGraph& t, const IndependentSet& s, int base) {
  json a = json::array();
  for (int i : s) a.push_back(subset_label(t.subset(static_cast<std::size_t>(i)), base));
  return a;
}

json token_set_labels(const TokenSet& s, int base) {
  json a = json::array();
  for (Mask m : s) a.push_back(subset_label(m, base));
  return a;
}

json parse_json_arg(const std::string& text, const std::string& file, const char* what) {
  try {
    if (!file.empty()) {
      std::ifstream f(file);
      if (!f) throw Error(errc::io, "cannot read " + file);
      return json::parse(f);
    }
    if (text.empty()) throw UsageError(std::string("missing ") + what);
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(errc::malformed, std::string(what) + ": " + e.what());
  }
}

Mask labels_to_mask(const json& list, int base, int n) {
  Mask m = 0;
  for (const auto& v : list) {
    const int x = v.get<int>() - base;
    if (x < 0 || x >= n) throw Error(errc::invalid_argument, "vertex label " + std::to_string(x + base) + " out of range");
    m |= bit(x);
  }
  return m;
}

// ---- subcommands -------------------------------------------------------

std::string token_output(const Input& in, int k, bool normalize, const Common& c) {
  const TokenGraph t = token_graph_normalized(in.graph, k, normalize, c.cap);
  if (c.format == "g6") return token_graph6(t) + "\n";
  if (c.format == "tsv") return token_edge_list(t, in.label_base);
  json j = base_json(in);
  j["k"] = t.k();
  j["order"] = t.size();
  j["size"] = t.edge_count();
  json verts = json::array();
  for (Mask s : t.subsets()) verts.push_back(subset_label(s, in.label_base));
  j["vertices"] = verts;
  json edges = json::array();
  for (auto [u, v] : t.edges()) edges.push_back({subset_label(t.subset(u), in.label_base), subset_label(t.subset(v), in.label_base)});
  j["edges"] = edges;
  j["graph6"] = token_graph6(t);
  return j.dump() + "\n";
}

std::string alpha_output(const Input& in, int k, const Common& c) {
  const TokenGraph t = token_graph(in.graph, k, c.cap);
  const AlphaResult a = independence_number(t.host());
  if (c.format == "tsv") return in.source + "\t" + std::to_string(k) + "\t" + std::to_string(a.alpha) + "\n";
  json j = base_json(in);
  j["k"] = k;
  j["alpha"] = a.alpha;
  j["witness"] = subset_labels(t, a.witness, in.label_base);
  return j.dump() + "\n";
}

std::string wellcovered_output(const Input& in, int k, bool early, const Common& c) {
  const TokenGraph t = token_graph(in.graph, k, c.cap);
  const WellCoveredReport r = is_well_covered(t.host(), early);
  if (c.format == "tsv") {
    return in.source + "\t" + std::to_string(k) + "\t" + (r.verdict ? "true" : "false") + "\t" + std::to_string(r.min_maximal) +
           "\t" + std::to_string(r.max_maximal) + "\n";
  }
  json j = base_json(in);
  j["k"] = k;
  j["verdict"] = r.verdict;
  j["min_maximal"] = r.min_maximal;
  j["max_maximal"] = r.max_maximal;
  j["witness_small"] = subset_labels(t, r.witness_small, in.label_base);
  j["witness_large"] = subset_labels(t, r.witness_large, in.label_base);
  j["enumeration_complete"] = r.enumeration_complete;
  j["token_graph6"] = r.host;
  return j.dump() + "\n";
}

std::string bounds_output(const Input& in, int k) {
  json j = base_json(in);
  j.update(json(bounds_report(in.graph, k)));
  return j.dump() + "\n";
}

std::string construct_output(const Input& in, const std::string& kind, const json& spec) {
  const int n = in.graph.order();
  std::vector<VertexSet> parts;
  try {
    for (const auto& p : spec.at("parts")) parts.emplace_back(labels_to_mask(p, in.label_base, n));
  } catch (const json::exception& e) {
    throw Error(errc::malformed, std::string("partition: ") + e.what());
  }
  TokenSet set;
  int k = 2;
  if (kind == "product") {
    set = product_set(in.graph, parts);
    k = static_cast<int>(parts.size());
  } else if (kind == "pairing") {
    set = pairing_independent_set(in.graph, parts);
  } else if (kind == "vvvv") {
    set = maximal_from_partition(in.graph, IndependentPartition(in.graph, parts));
  } else {
    std::optional<std::vector<Edge>> edges;
    if (spec.contains("edges")) {
      edges.emplace();
      for (const auto& e : spec["edges"]) {
        const auto v = e.get<std::vector<int>>();
        if (v.size() != 2) throw Error(errc::malformed, "edges need two endpoints");
        edges->emplace_back(v[0] - in.label_base, v[1] - in.label_base);
      }
    }
    set = maximal_from_coloring_edges(in.graph, IndependentPartition(in.graph, parts), edges);
  }
  json j = base_json(in);
  j["construction"] = kind;
  j["k"] = k;
  j["size"] = set.size();
  j["set"] = token_set_labels(set, in.label_base);
  j["independent"] = token_set_independent(in.graph, set);
  j["maximal"] = token_set_maximal(in.graph, k, set);
  return j.dump() + "\n";
}

json design_json(const DesignCertificate& c, int base) {
  json j = json(c);
  json blocks = json::array();
  for (Mask b : c.blocks) blocks.push_back(vertex_labels(b, base));
  j["blocks"] = blocks;
  j["labels"] = labels_name(base);
  return j;
}

DesignCertificate design_from_json(const json& j, int base) {
  json shifted = j;
  if (base != 0 && j.contains("blocks")) {
    for (auto& b : shifted["blocks"])
      for (auto& p : b) p = p.get<int>() - base;
  }
  return shifted.get<DesignCertificate>();
}

std::vector<Mask> blocks_from_json(const json& j, int base, int n) {
  std::vector<Mask> out;
  try {
    for (const auto& b : j) {
      const Mask m = labels_to_mask(b, base, n);
      if (std::popcount(m) != static_cast<int>(b.size())) throw Error(errc::malformed, "repeated point in a block");
      out.push_back(m);
    }
  } catch (const json::exception& e) {
    throw Error(errc::malformed, std::string("blocks: ") + e.what());
  }
  return out;
}

json splits_json(const Graph& g, int base, const std::function<json(const TwoCliqueGraph&)>& body) {
  json splits = json::array();
  for (const auto& s : decompose_two_clique(g)) {
    json x = body(s.split);
    json origin = json::array();
    for (int v : s.origin) origin.push_back(v + base);
    x["origin"] = origin;
    x["two_clique"] = two_clique_json(s.split);
    splits.push_back(std::move(x));
  }
  return splits;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Token graphs, well-coveredness and the order-9 census"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Common common;
  int k = 2;
  bool normalize = false;
  bool early_exit = false;
  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("--graph,-g", common.graphs, "Named graph, e.g. petersen, cycle:5, complete_bipartite:3,3");
    sub->add_option("--input,-i", common.files, "File of graph6 records (default: graph6 lines on stdin)");
    sub->add_option("--jobs,-j", common.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--cap-token-vertices", common.cap, "Largest token graph to build")->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* sub, const std::string& desc) {
    sub->add_option("--format,-f", common.format, desc)->check(CLI::IsMember({"json", "tsv", "g6"}));
  };

  auto* token = app.add_subcommand("token", "Emit the k-token graph");
  add_inputs(token);
  add_format(token, "json, tsv (edge list) or g6");
  token->add_option("--k", k, "Token count")->required();
  token->add_flag("--normalize", normalize, "Replace k by min(k, n-k)");

  auto* alpha = app.add_subcommand("alpha", "Independence number of the k-token graph");
  add_inputs(alpha);
  add_format(alpha, "json or tsv");
  alpha->add_option("--k", k, "Token count");

  auto* wc = app.add_subcommand("wellcovered", "Well-coveredness of the k-token graph");
  add_inputs(wc);
  add_format(wc, "json or tsv");
  wc->add_option("--k", k, "Token count");
  wc->add_flag("--early-exit", early_exit, "Stop at the first pair of maximal sets of different size");

  auto* bounds = app.add_subcommand("bounds", "Bounds and necessary-condition filters");
  add_inputs(bounds);
  add_format(bounds, "json");
  bounds->add_option("--k", k, "Token count");

  std::string construct_kind;
  std::string partition_text, partition_file;
  auto* construct = app.add_subcommand("construct", "Build an independent set of a token graph from a partition");
  add_inputs(construct);
  add_format(construct, "json");
  construct->add_option("kind", construct_kind, "product, vvvv, vve or pairing")
      ->required()
      ->check(CLI::IsMember({"product", "vvvv", "vve", "pairing"}));
  construct->add_option("--partition", partition_text, R"(JSON {"parts": [[...]], "edges": [[a,b]]} in the graph's labels)");
  construct->add_option("--partition-file", partition_file, "File holding the partition JSON");

  std::string design_action, cert_text, cert_file, blocks_text;
  int design_n = 0;
  int design_base = 0;
  auto* design = app.add_subcommand("design", "Design certificates");
  add_inputs(design);
  add_format(design, "json");
  design->add_option("action", design_action, "verify, extract, johnson or steiner-check")
      ->required()
      ->check(CLI::IsMember({"verify", "extract", "johnson", "steiner-check"}));
  design->add_option("--certificate", cert_text, "Certificate JSON {v, k, t, lambda, blocks}");
  design->add_option("--certificate-file", cert_file, "File holding the certificate JSON");
  design->add_option("--blocks", blocks_text, "JSON list of blocks for steiner-check");
  design->add_option("--n", design_n, "Point count (johnson, steiner-check)");
  design->add_option("--k", k, "Block size (johnson) or token count (extract)");
  design->add_option("--label-base", design_base, "First point label in blocks")->check(CLI::IsMember({0, 1}));

  std::string family_action, variant, two_clique_text;
  int fm = 0, fn = 0, fs = 0, ft = 0, exact_limit = 10;
  auto* family = app.add_subcommand("family", "Two-clique graphs");
  add_inputs(family);
  add_format(family, "json");
  family->add_option("action", family_action, "build, detect or classify")->required()->check(CLI::IsMember({"build", "detect", "classify"}));
  family->add_option("--variant", variant, "bba, bbb or bbc")->check(CLI::IsMember({"bba", "bbb", "bbc"}));
  family->add_option("--m", fm, "Small clique size");
  family->add_option("--n", fn, "Large clique size");
  family->add_option("--s", fs, "First star size");
  family->add_option("--t", ft, "Second star size");
  family->add_option("--two-clique", two_clique_text, R"(JSON {"m", "n", "cross": [[i,j]]}, 1-based within each clique)");
  family->add_option("--exact-limit", exact_limit, "Largest m+n for the appended exact check");

  std::vector<int> orders;
  bool no_filters = false, parts = false, include_disconnected = false, audit = false, timings = false;
  std::string cache_dir, catalogue_dir, out_dir;
  auto* search = app.add_subcommand("search", "Census of graphs whose 2-token graph is well-covered");
  add_format(search, "json, tsv (order and count) or g6 (survivors)");
  search->add_option("--n", orders, "Orders to sweep (2..9)")->required()->check(CLI::Range(2, 9));
  search->add_option("--jobs,-j", common.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--filters,!--no-filters", [&](std::int64_t c) { no_filters = c < 0; }, "Necessary-condition filters (default on)");
  search->add_flag("--parts-filter", parts, "Also apply the partition filter");
  search->add_flag("--include-disconnected", include_disconnected, "Search disconnected graphs too");
  search->add_option("--cache-dir", cache_dir, "Result cache (overrides WCT_CACHE_DIR)");
  search->add_option("--verify-catalogue", catalogue_dir, "Directory holding expected-n<N>.g6 files");
  search->add_option("--out-dir", out_dir, "Write survivors to catalogue-n<N>.g6 here");
  search->add_flag("--audit", audit, "Match survivors to the known families");
  search->add_flag("--timings", timings, "Include per-stage seconds and cache use");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << error_json("usage", e.what()).dump() << "\n";
    return 2;
  }

  try {
    if (*token) {
      require_format(common.format, {"json", "tsv", "g6"});
      return for_each_input(gather_inputs(common, in), common.jobs, out, err,
                            [&](const Input& x) { return token_output(x, k, normalize, common); });
    }
    if (*alpha) {
      require_format(common.format, {"json", "tsv"});
      return for_each_input(gather_inputs(common, in), common.jobs, out, err, [&](const Input& x) { return alpha_output(x, k, common); });
    }
    if (*wc) {
      require_format(common.format, {"json", "tsv"});
      return for_each_input(gather_inputs(common, in), common.jobs, out, err,
                            [&](const Input& x) { return wellcovered_output(x, k, early_exit, common); });
    }
    if (*bounds) {
      require_format(common.format, {"json"});
      return for_each_input(gather_inputs(common, in), common.jobs, out, err, [&](const Input& x) { return bounds_output(x, k); });
    }
    if (*construct) {
      require_format(common.format, {"json"});
      const json spec = parse_json_arg(partition_text, partition_file, "partition");
      return for_each_input(gather_inputs(common, in), common.jobs, out, err,
                            [&](const Input& x) { return construct_output(x, construct_kind, spec); });
    }
    if (*design) {
      require_format(common.format, {"json"});
      if (design_action == "verify") {
        const DesignCertificate c = design_from_json(parse_json_arg(cert_text, cert_file, "certificate"), design_base);
        const DesignCheck r = verify_design(c);
        json j{{"valid", r.valid}, {"reason", r.reason}, {"labels", labels_name(design_base)}};
        j["violating"] = r.violating ? vertex_labels(*r.violating, design_base) : json(nullptr);
        if (r.violating) j["violating_count"] = r.violating_count;
        out << j.dump() << "\n";
        return 0;
      }
      if (design_action == "johnson") {
        if (design_n <= 0) throw UsageError("johnson needs --n");
        const auto d = johnson_equality(design_n, k);
        json j{{"n", design_n}, {"k", k}, {"present", d.has_value()}};
        j["certificate"] = d ? design_json(*d, design_base) : json(nullptr);
        out << j.dump() << "\n";
        return 0;
      }
      if (design_action == "steiner-check") {
        if (design_n <= 0) throw UsageError("steiner-check needs --n");
        if (blocks_text.empty()) throw UsageError("steiner-check needs --blocks");
        const auto blocks = blocks_from_json(parse_json_arg(blocks_text, "", "blocks"), design_base, design_n);
        const auto r = maximal_partial_steiner_check(design_n, blocks);
        out << json{{"n", design_n}, {"independent", r.independent}, {"maximal", r.maximal}, {"maximum", r.maximum}}.dump() << "\n";
        return 0;
      }
      return for_each_input(gather_inputs(common, in), common.jobs, out, err, [&](const Input& x) {
        const TokenGraph t = token_graph(x.graph, k, common.cap);
        TokenSet s;
        for (int i : independence_number(t.host()).witness) s.push_back(t.subset(static_cast<std::size_t>(i)));
        std::sort(s.begin(), s.end());
        json j = base_json(x);
        j["k"] = k;
        j["certificate"] = design_json(extract_design_from_equality(x.graph, k, s), x.label_base);
        return j.dump() + "\n";
      });
    }
    if (*family) {
      require_format(common.format, {"json"});
      if (family_action == "build") {
        if (variant.empty()) throw UsageError("build needs --variant");
        const auto g = build_wellcovered_family(*variant_from_name(variant), fm, fn, fs, ft);
        json j{{"variant", variant}, {"two_clique", two_clique_json(g)}, {"graph6", to_graph6(g.graph())}};
        j["classification"] = classification_json(g, classify_two_clique(g, exact_limit));
        out << j.dump() << "\n";
        return 0;
      }
      auto body = [&](const TwoCliqueGraph& g) {
        if (family_action == "classify") return json{{"classification", classification_json(g, classify_two_clique(g, exact_limit))}};
        json f = json::array();
        for (const auto& x : detect_forbidden(g)) f.push_back(finding_json(g, x));
        return json{{"findings", f}};
      };
      if (!two_clique_text.empty()) {
        const TwoCliqueGraph g = two_clique_from_json(parse_json_arg(two_clique_text, "", "two-clique graph"));
        json j = body(g);
        j["two_clique"] = two_clique_json(g);
        j["graph6"] = to_graph6(g.graph());
        out << j.dump() << "\n";
        return 0;
      }
      return for_each_input(gather_inputs(common, in), common.jobs, out, err, [&](const Input& x) {
        json j = base_json(x);
        j["splits"] = splits_json(x.graph, x.label_base, body);
        return j.dump() + "\n";
      });
    }
    if (*search) {
      SearchOptions o;
      o.filters = !no_filters;
      o.parts_filter = parts;
      o.include_disconnected = include_disconnected;
      o.jobs = common.jobs;
      if (!cache_dir.empty()) o.cache_dir = std::filesystem::path(cache_dir);
      int code = 0;
      for (int n : orders) {
        const SearchResult r = search_order(n, o);
        if (!out_dir.empty()) {
          std::filesystem::create_directories(out_dir);
          write_graph6_file(std::filesystem::path(out_dir) / ("catalogue-n" + std::to_string(n) + ".g6"), r.survivors);
        }
        std::optional<CatalogueDiff> diff;
        if (!catalogue_dir.empty()) {
          diff = verify_catalogue(r.survivors,
                                  read_graph6_file(std::filesystem::path(catalogue_dir) / ("expected-n" + std::to_string(n) + ".g6")));
          if (!diff->empty()) {
            err << error_json("catalogue_mismatch", "order " + std::to_string(n) + " differs from the expected catalogue").dump() << "\n";
            code = 1;
          }
        }
        if (common.format == "g6") {
          for (const auto& s : r.survivors) out << s << "\n";
          continue;
        }
        if (common.format == "tsv") {
          out << n << "\t" << r.survivors.size() << "\n";
          continue;
        }
        json j = json(r);
        if (!timings) {
          j.erase("elapsed");
          j.erase("from_cache");
        }
        if (diff) j["catalogue"] = json(*diff);
        if (audit) j["audit"] = json(family_membership_audit(r.survivors));
        out << j.dump() << "\n";
      }
      return code;
    }
  } catch (const UsageError& e) {
    err << error_json("usage", e.what()).dump() << "\n";
    return 2;
  } catch (const Error& e) {
    err << error_json(e.code(), e.what()).dump() << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << error_json(errc::malformed, e.what()).dump() << "\n";
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << error_json(errc::io, e.what()).dump() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace wct
