#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagpoly/graph.hpp"

namespace flagpoly {

struct CanonicalResult {
    std::string certificate;  // label-independent; equal iff graphs isomorphic
    std::vector<int> order;   // order[pos] = original vertex at canonical position pos
};

// Canonical labeling by iterated color refinement with backtracking over
// the first smallest non-singleton cell; the certificate is the minimum
// adjacency encoding over all refinement leaves.
CanonicalResult canonical_labeling(const CompatibilityGraph& g);

std::string canonical_form(const CompatibilityGraph& g);

// A facet bijection g1 -> g2 preserving adjacency, or nullopt. Ignores labels.
std::optional<std::vector<int>> isomorphism(const CompatibilityGraph& g1,
                                            const CompatibilityGraph& g2);

} // namespace flagpoly
