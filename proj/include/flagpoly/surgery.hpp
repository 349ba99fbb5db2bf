#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagpoly/graph.hpp"
#include "flagpoly/poly.hpp"

namespace flagpoly {

// Cut off the codimension-2 face F1 n F2: the edge disappears and one new
// facet arrives, adjacent to F1, F2, and their common neighbors. Preserves
// simplicity and dimension; facet count grows by one. Throws NotAdjacent;
// SimplicityViolation if the result fails the guard (an invalid input).
CompatibilityGraph shave(const CompatibilityGraph& g, int f1, int f2);

// The face being cut, as a polytope of dimension n-2. Throws NotAdjacent.
CompatibilityGraph shaved_face(const CompatibilityGraph& g, int f1, int f2);

// gamma of the shaved polytope: gamma_P + tau * gamma_G where G is the cut
// face. An identity of the surgery, revalidated against direct computation
// wherever sequences are replayed.
IntPolynomial gamma_after_shave(const IntPolynomial& gamma_p, const IntPolynomial& gamma_face);

// Multiset of facet types keyed by the canonical forms of their
// direct-product factors, with a readable name per type.
struct FacetTypeTally {
    std::map<std::string, std::int64_t> counts; // canonical key -> multiplicity
    std::map<std::string, std::string> names;   // canonical key -> display name

    void add(const std::string& key, const std::string& name, std::int64_t k = 1);
    std::int64_t total() const;
    bool same_counts(const FacetTypeTally& other) const;
    // one line per differing key; empty when the multisets agree
    std::string describe_difference(const FacetTypeTally& other) const;
    std::string to_string() const;
};

// Canonical key of one polytope as a product of indecomposables: sorted
// factor certificates joined by '|'. Optionally emits the display name.
std::string facet_type_key(const CompatibilityGraph& face, std::string* name = nullptr);

// "As^k" / "D^k" for the known families (ranks up to 7), or a digest-based
// placeholder for types outside the registry.
std::string family_name_for(const std::string& certificate);

// d P: every facet as a face polytope, decomposed and tallied by type.
FacetTypeTally boundary(const CompatibilityGraph& g);

// The predicted facet census of D^n: n copies of As^k x D^(n-k-1) for
// k = 0..n-3 plus 2n copies of As^(n-1), built from actual product models so
// the low-rank identifications fall out of canonicalization. Throws
// InvalidRank for n < 4.
FacetTypeTally expected_boundary_d(int n);

struct Prop1Report {
    int n = 0;
    bool match = false;
    FacetTypeTally actual;
    FacetTypeTally expected;
    std::string mismatch; // empty when match
};
Prop1Report verify_proposition1(int n);

// P x I; the two segment facets become Derived("base0") / Derived("base1").
CompatibilityGraph prism(const CompatibilityGraph& g);

struct ShaveStep {
    int f1 = 0;
    int f2 = 0;
    FacetLabel new_label; // label of the facet the shave created
};

enum class SearchStrategy { Guided, Full };

struct SearchStats {
    std::int64_t nodes = 0;
    std::int64_t memo_hits = 0;
    std::int64_t pruned = 0;
    double seconds = 0.0;
};

// Backtracking search for a shave sequence turning `source` into a graph
// isomorphic to `target`. The step count is forced by the facet-count
// difference; canonical forms serve as a transposition table and an
// h-vector dominance check prunes overshoot (h grows coefficientwise under
// shaving). Guided restricts candidates to edges touching the prism facet
// Derived("base0") or facets created by earlier shaves. Deterministic:
// candidates are ordered by (degree sum, index pair) and the first sequence
// found wins. Throws DimensionMismatch; StepBudget when the step count is
// out of range or the time budget runs out.
std::optional<std::vector<ShaveStep>> find_shaving_sequence(const CompatibilityGraph& source,
                                                            const CompatibilityGraph& target,
                                                            int max_steps, SearchStrategy strategy,
                                                            double budget_seconds = 1e18,
                                                            SearchStats* stats = nullptr);

// Replay a recorded sequence; throws if any step is illegal on the way.
CompatibilityGraph apply_shaves(const CompatibilityGraph& source,
                                const std::vector<ShaveStep>& steps);

struct Thm2Report {
    int n = 0;
    bool success = false;
    std::string strategy_used;              // "guided" or "full"
    std::vector<ShaveStep> steps;
    std::vector<IntPolynomial> gamma_trace; // gamma after 0, 1, .., k steps
    std::string target_canonical;
    SearchStats stats;
    std::string note; // diagnostics when success is false
};

// Certify D^n reachable from prism(D^(n-1)) by 2n-3 shaves, then replay the
// sequence checking the gamma identity at each step. Tries the guided
// strategy first and falls back to the full one. Throws InvalidRank for
// n < 3; StepBudget when the total budget is exhausted with no verdict.
Thm2Report verify_theorem2(int n, double budget_seconds = 300.0);

} // namespace flagpoly
