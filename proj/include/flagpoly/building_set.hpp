#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagpoly/graph.hpp"
#include "flagpoly/poly.hpp"

namespace flagpoly {

// Subsets of the ground set {1..ground} as bitmasks (element i on bit i-1).
using Mask = std::uint64_t;

// A collection of distinct non-empty subsets of the ground set. Structural
// sanity (range, distinctness) is enforced on construction; the building-set
// axioms themselves are the business of validate_building_set.
struct BuildingSet {
    int ground = 0;
    std::vector<Mask> sets; // ascending by mask value

    BuildingSet() = default;
    BuildingSet(int ground, std::vector<Mask> sets);

    Mask full() const { return (Mask(1) << ground) - 1; }
    bool contains(Mask m) const;
    // members other than the full set, ascending; the facet order of P_B
    std::vector<Mask> proper_sets() const;
};

// True iff all singletons are present, the union of any two intersecting
// members is a member, and the full set is present (connectedness). When a
// diagnostic pointer is given it receives the first violated axiom.
bool validate_building_set(const BuildingSet& b, std::string* diagnostic = nullptr);

// Restriction and contraction re-index their ground set densely; ground_map
// records which original element each new element stands for.
struct ReindexedBuildingSet {
    BuildingSet b;
    std::vector<int> ground_map; // new 0-based element -> original 0-based element
};

// B|_S = members contained in S, on ground S. Throws NotAMember, FullSet.
ReindexedBuildingSet restriction(const BuildingSet& b, Mask s);

// B/S = non-empty differences S''\S, deduplicated, on ground [n+1]\S.
// Throws NotAMember, FullSet; InvalidBuildingSet if the result fails the
// axioms (impossible for a valid connected input).
ReindexedBuildingSet contraction(const BuildingSet& b, Mask s);

// f_i of the nestohedron P_B = number of nested sets of cardinality n-i,
// where n = ground-1 and the empty nested set contributes f_n = 1.
FVector nested_complex_f_vector(const BuildingSet& b);

// True iff every pairwise-nested collection is a nested set, i.e. the nested
// complex is the clique complex of its 1-skeleton. The only obstruction is a
// family of >= 3 pairwise-disjoint members, no two of which union into B,
// whose total union lies in B.
bool flagness_check(const BuildingSet& b);

// Compatibility graph of P_B for flag B: vertices are the members below the
// full set with BSet labels, edges mark two-element nested sets. Throws
// InvalidBuildingSet, NotFlag.
CompatibilityGraph nestohedron_graph(const BuildingSet& b);

// All vertex subsets inducing connected subgraphs. Throws Disconnected for a
// disconnected input graph, BadInput for out-of-range edges or a ground set
// too large to enumerate.
BuildingSet graph_building_set(int vertices, const std::vector<std::pair<int, int>>& edges);

// Intervals of the path 1-2-...-m; P_B is the associahedron As^(m-1).
BuildingSet path_building_set(int ground);

// Cyclic arcs of the cycle on m >= 3 vertices; P_B is the cyclohedron
// Cy^(m-1).
BuildingSet cycle_building_set(int ground);

// One term P_{B|_S} x P_{B/S} of the facet decomposition
// d P_B = sum over S in B minus the full set.
struct BoundaryTerm {
    Mask s;
    ReindexedBuildingSet restricted;
    ReindexedBuildingSet contracted;
};
std::vector<BoundaryTerm> boundary_formula(const BuildingSet& b);

// Witness that P is not a nestohedron: P indecomposable with >= 2n+3 facets
// whose face polytopes are themselves indecomposable. Absence proves nothing.
struct Prop2Certificate {
    int dimension = 0;
    int required = 0;                        // 2n+3
    std::vector<int> indecomposable_facets;  // facet indices of g
};
std::optional<Prop2Certificate> non_nestohedron_certificate(const CompatibilityGraph& g);

// Exhaustive enumeration of connected building sets on {1..ground}, visited
// in a fixed deterministic order. Supported for ground <= 5; the counts grow
// too fast beyond that.
void enumerate_connected_building_sets(int ground,
                                       const std::function<void(const BuildingSet&)>& visit);
std::vector<BuildingSet> enumerate_connected_building_sets(int ground);

} // namespace flagpoly
