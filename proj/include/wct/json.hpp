#pragma once

#include <json.hpp>

#include "wct/bounds.hpp"
#include "wct/designs.hpp"
#include "wct/family.hpp"
#include "wct/search.hpp"

namespace wct {

using json = nlohmann::json;

void to_json(json& j, const BoundsReport& r);

/// {v, k, t, lambda, blocks: [[points]]}, points 0..v-1.
void to_json(json& j, const DesignCertificate& c);
void from_json(const json& j, DesignCertificate& c);

/// {m, n, cross: [[i, j]]} with i in 1..m and j in 1..n.
json two_clique_json(const TwoCliqueGraph& g);
/// Throws malformed on a bad shape, invalid_argument on bad values.
TwoCliqueGraph two_clique_from_json(const json& j);

/// Witness roles map to clique-relative names such as "x1" or "y3".
json finding_json(const TwoCliqueGraph& g, const ForbiddenFinding& f);
json classification_json(const TwoCliqueGraph& g, const Classification& c);

void to_json(json& j, const SearchResult& r);
void from_json(const json& j, SearchResult& r);

void to_json(json& j, const CatalogueDiff& d);
void to_json(json& j, const MembershipAudit& a);

}  // namespace wct
