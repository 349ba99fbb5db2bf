#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "flagpoly/building_set.hpp"
#include "flagpoly/graph.hpp"
#include "flagpoly/surgery.hpp"

namespace flagpoly {

using Json = nlohmann::json;

// Facet labels: {"kind":"adiag","a":..,"b":..}, {"kind":"dpair","a":..,"b":..}
// (canonical diagonal, the antipode implied), {"kind":"ddiam","a":..,
// "color":0|1}, {"kind":"bset","elements":[1-based]}, {"kind":"derived",
// "tag":".."}.
Json label_to_json(const FacetLabel& l);
FacetLabel label_from_json(const Json& j);

// {"dimension": n, "facets": [labels], "edges": [[i,j],..]} with i<j, edges
// in lexicographic order.
Json graph_to_json(const CompatibilityGraph& g);
CompatibilityGraph graph_from_json(const Json& j);

// {"ground": m, "sets": [[1-based elements, ascending],..]} with the sets in
// a fixed deterministic order.
Json building_set_to_json(const BuildingSet& b);
BuildingSet building_set_from_json(const Json& j);

// {"source": graph, "steps": [{"f1": label, "f2": label},..],
//  "target_canonical": text, "gamma_trace": [[coefficients],..]}
Json certificate_to_json(const CompatibilityGraph& source, const std::vector<ShaveStep>& steps,
                         const std::string& target_canonical,
                         const std::vector<IntPolynomial>& gamma_trace);

struct CertificateData {
    CompatibilityGraph source;
    std::vector<std::pair<FacetLabel, FacetLabel>> step_labels;
    std::string target_canonical;
    std::vector<IntPolynomial> gamma_trace;
};
CertificateData certificate_from_json(const Json& j);

// Turn recorded step labels back into indices by replaying the shaves.
std::vector<ShaveStep> resolve_steps(const CompatibilityGraph& source,
                                     const std::vector<std::pair<FacetLabel, FacetLabel>>& steps);

// Content digest of a JSON value (over the compact sorted-key dump).
std::string stable_digest(const Json& j);

// Canonical on-disk form: two-space indent plus a trailing newline.
std::string dump_json(const Json& j);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace flagpoly
