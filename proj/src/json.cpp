#include "wct/json.hpp"

#include "wct/error.hpp"

namespace wct {

void to_json(json& j, const BoundsReport& r) {
  j = json{{"n", r.n}, {"k", r.k}, {"alpha_base", r.alpha_base}, {"lower_binom", r.lower_binom}};
  j["upper_qbound"] = r.upper_qbound ? json(*r.upper_qbound) : json(nullptr);
  j["lower_dmsa"] = r.lower_dmsa ? json(*r.lower_dmsa) : json(nullptr);
  j["filters"] = r.filters;
}

void to_json(json& j, const DesignCertificate& c) {
  json blocks = json::array();
  for (Mask b : c.blocks) blocks.push_back(bits_to_list(b));
  j = json{{"v", c.v}, {"k", c.k}, {"t", c.t}, {"lambda", c.lambda}, {"blocks", blocks}};
}

void from_json(const json& j, DesignCertificate& c) {
  try {
    c.v = j.at("v").get<int>();
    c.k = j.at("k").get<int>();
    c.t = j.at("t").get<int>();
    c.lambda = j.at("lambda").get<std::uint64_t>();
    c.blocks.clear();
    for (const auto& b : j.at("blocks")) {
      Mask m = 0;
      for (int p : b.get<std::vector<int>>()) {
        if (p < 0 || p >= kMaxVertices) throw Error(errc::malformed, "block point out of range");
        if (m & bit(p)) throw Error(errc::malformed, "repeated point in a block");
        m |= bit(p);
      }
      c.blocks.push_back(m);
    }
  } catch (const json::exception& e) {
    throw Error(errc::malformed, std::string("design certificate: ") + e.what());
  }
}

json two_clique_json(const TwoCliqueGraph& g) {
  json cross = json::array();
  for (auto [i, j] : g.cross()) cross.push_back({i + 1, j + 1});
  return json{{"m", g.m()}, {"n", g.n()}, {"cross", cross}};
}

TwoCliqueGraph two_clique_from_json(const json& j) {
  int m = 0, n = 0;
  std::vector<std::pair<int, int>> cross;
  try {
    m = j.at("m").get<int>();
    n = j.at("n").get<int>();
    for (const auto& p : j.value("cross", json::array())) {
      const auto v = p.get<std::vector<int>>();
      if (v.size() != 2) throw Error(errc::malformed, "cross pairs need two entries");
      cross.emplace_back(v[0] - 1, v[1] - 1);
    }
  } catch (const json::exception& e) {
    throw Error(errc::malformed, std::string("two-clique graph: ") + e.what());
  }
  return build_two_clique(m, n, std::move(cross));
}

namespace {

std::string role(const TwoCliqueGraph& g, int v) {
  return v < g.m() ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - g.m() + 1);
}

}  // namespace

json finding_json(const TwoCliqueGraph& g, const ForbiddenFinding& f) {
  json w = json::array();
  for (int v : f.witness) w.push_back(role(g, v));
  return json{{"rule", rule_name(f.rule)}, {"witness", w}};
}

json classification_json(const TwoCliqueGraph& g, const Classification& c) {
  json j{{"verdict", verdict_name(c.verdict)}};
  j["theorem"] = c.theorem.empty() ? json(nullptr) : json(c.theorem);
  if (c.verdict == Verdict::well_covered_by_theorem && c.theorem != "complete") {
    j["s"] = c.s;
    j["t"] = c.t;
  }
  json f = json::array();
  for (const auto& x : c.findings) f.push_back(finding_json(g, x));
  j["findings"] = f;
  j["exact"] = c.exact ? json(*c.exact) : json(nullptr);
  return j;
}

void to_json(json& j, const SearchResult& r) {
  j = json{{"n", r.n},
           {"total_enumerated", r.total_enumerated},
           {"filter_kill_counts", r.filter_kill_counts},
           {"exact_rejections", r.exact_rejections},
           {"survivor_count", r.survivors.size()},
           {"survivors", r.survivors},
           {"elapsed", r.elapsed},
           {"from_cache", r.from_cache}};
}

void from_json(const json& j, SearchResult& r) {
  r.n = j.at("n").get<int>();
  r.total_enumerated = j.at("total_enumerated").get<std::uint64_t>();
  r.filter_kill_counts = j.at("filter_kill_counts").get<std::map<std::string, std::uint64_t>>();
  r.exact_rejections = j.at("exact_rejections").get<std::uint64_t>();
  r.survivors = j.at("survivors").get<std::vector<std::string>>();
  r.elapsed = j.at("elapsed").get<std::map<std::string, double>>();
  r.from_cache = j.value("from_cache", false);
}

void to_json(json& j, const CatalogueDiff& d) {
  j = json{{"match", d.empty()}, {"missing", d.missing}, {"unexpected", d.unexpected}};
}

void to_json(json& j, const MembershipAudit& a) {
  json entries = json::array();
  for (const auto& e : a.entries) {
    json x{{"graph6", e.graph6}, {"matched", e.matched}};
    if (e.matched) {
      x["theorem"] = e.theorem;
      if (e.theorem != "complete") {
        x["m"] = e.m;
        x["n"] = e.n;
        x["s"] = e.s;
        x["t"] = e.t;
      }
    }
    entries.push_back(std::move(x));
  }
  j = json{{"entries", entries}, {"unmatched", a.unmatched}};
}

}  // namespace wct
