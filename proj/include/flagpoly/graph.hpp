#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "flagpoly/bitset64.hpp"
#include "flagpoly/label.hpp"
#include "flagpoly/poly.hpp"

namespace flagpoly {

// Facets of a flag simple polytope as labeled vertices; edges mark facet
// pairs with non-empty intersection. Immutable after construction; every
// operation below is a pure function.
class CompatibilityGraph {
public:
    CompatibilityGraph(int dimension, std::vector<FacetLabel> labels,
                       const std::vector<std::pair<int, int>>& edges);

    int dimension() const { return dim_; }
    std::size_t size() const { return labels_.size(); }

    bool adjacent(int i, int j) const { return adj_[std::size_t(i)].test(std::size_t(j)); }
    const Bitset64& neighbors(int i) const { return adj_[std::size_t(i)]; }
    const std::vector<Bitset64>& adjacency() const { return adj_; }

    const FacetLabel& label(int i) const { return labels_[std::size_t(i)]; }
    const std::vector<FacetLabel>& labels() const { return labels_; }
    int find_label(const FacetLabel& l) const; // -1 when absent

    std::size_t degree(int i) const { return adj_[std::size_t(i)].count(); }
    std::size_t edge_count() const;
    // i<j pairs in lexicographic order
    std::vector<std::pair<int, int>> edge_list() const;

private:
    int dim_;
    std::vector<FacetLabel> labels_;
    std::vector<Bitset64> adj_;
};

// True iff every maximal clique has exactly the declared dimension's size.
bool simplicity_check(const CompatibilityGraph& g);

// f_i = number of cliques of cardinality n-i. Throws SimplicityViolation.
FVector clique_f_vector(const CompatibilityGraph& g);

// The face shared by a clique of facets, as a polytope of dimension
// n - |clique|: induced subgraph on the common neighbors. Throws NotAClique.
CompatibilityGraph face_graph(const CompatibilityGraph& g, std::span<const int> clique);

// Graph join: facets of P x Q are F x Q and P x G, and cross pairs always
// intersect. Right-hand labels are wrapped into Derived labels on collision.
CompatibilityGraph product(const CompatibilityGraph& a, const CompatibilityGraph& b);

// Direct-product factors: connected components of the complement graph.
// Each factor's dimension is its own maximal clique size. The empty graph
// (a point) yields an empty list.
std::vector<CompatibilityGraph> decompose(const CompatibilityGraph& g);

// Shorthands for the f -> h -> gamma pipeline on a graph.
IntPolynomial graph_h_polynomial(const CompatibilityGraph& g);
IntPolynomial graph_gamma_polynomial(const CompatibilityGraph& g);

} // namespace flagpoly
