#include <string>
#include <vector>

#include "doctest.h"

#include "flagpoly/canonical.hpp"
#include "flagpoly/graph.hpp"

using namespace flagpoly;

namespace {

std::vector<FacetLabel> named(int count, const std::string& prefix = "v") {
    std::vector<FacetLabel> labels;
    for (int i = 0; i < count; ++i) labels.push_back(FacetLabel::derived(prefix + std::to_string(i)));
    return labels;
}

CompatibilityGraph cycle_graph(int m, int dimension = 2) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) edges.emplace_back(std::min(i, (i + 1) % m), std::max(i, (i + 1) % m));
    return CompatibilityGraph(dimension, named(m), edges);
}

CompatibilityGraph segment_graph() { return CompatibilityGraph(1, named(2), {}); }

} // namespace

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(CompatibilityGraph(2, named(3), {{0, 3}}), Error);
    CHECK_THROWS_AS(CompatibilityGraph(2, named(3), {{1, 1}}), Error);
    CHECK_THROWS_AS(CompatibilityGraph(2, named(3), {{-1, 0}}), Error);
    std::vector<FacetLabel> dup = {FacetLabel::derived("x"), FacetLabel::derived("x")};
    CHECK_THROWS_AS(CompatibilityGraph(1, dup, {}), Error);
}

TEST_CASE("accessors on the square") {
    CompatibilityGraph sq = cycle_graph(4);
    CHECK(sq.dimension() == 2);
    CHECK(sq.size() == 4);
    CHECK(sq.adjacent(0, 1));
    CHECK_FALSE(sq.adjacent(0, 2));
    CHECK(sq.degree(0) == 2);
    CHECK(sq.edge_count() == 4);
    CHECK(sq.edge_list() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(sq.find_label(FacetLabel::derived("v2")) == 2);
    CHECK(sq.find_label(FacetLabel::derived("nope")) == -1);
}

TEST_CASE("simplicity check") {
    CHECK(simplicity_check(cycle_graph(4)));
    CHECK(simplicity_check(cycle_graph(5)));
    CHECK_FALSE(simplicity_check(cycle_graph(4, 3)));

    // a triangle of pairwise-intersecting facets is not simple in rank 2
    CompatibilityGraph k3(2, named(3), {{0, 1}, {0, 2}, {1, 2}});
    CHECK_FALSE(simplicity_check(k3));
    CHECK_THROWS_AS(clique_f_vector(k3), Error);

    // the point: no facets, dimension 0
    CompatibilityGraph point(0, {}, {});
    CHECK(simplicity_check(point));
    CHECK(clique_f_vector(point) == FVector{0, {1}});
}

TEST_CASE("f-vectors of polygons") {
    for (int m = 4; m <= 9; ++m) {
        FVector fv = clique_f_vector(cycle_graph(m));
        CHECK(fv == FVector{2, {m, m, 1}});
        CHECK(fv.facet_count() == m);
    }
}

TEST_CASE("face graphs of the square") {
    CompatibilityGraph sq = cycle_graph(4);
    const int edge_face[] = {0, 1};
    CompatibilityGraph vertex_face = face_graph(sq, edge_face);
    CHECK(vertex_face.dimension() == 0);
    CHECK(vertex_face.size() == 0);

    const int facet_face[] = {2};
    CompatibilityGraph seg = face_graph(sq, facet_face);
    CHECK(seg.dimension() == 1);
    CHECK(seg.size() == 2);
    CHECK(seg.edge_count() == 0);

    const int not_clique[] = {0, 2};
    CHECK_THROWS_AS(face_graph(sq, not_clique), Error);
    const int out_of_range[] = {9};
    CHECK_THROWS_AS(face_graph(sq, out_of_range), Error);
}

TEST_CASE("products join graphs and multiply vectors") {
    CompatibilityGraph seg = segment_graph();
    CompatibilityGraph sq = product(seg, seg);
    CHECK(sq.dimension() == 2);
    CHECK(sq.size() == 4);
    CHECK(clique_f_vector(sq) == FVector{2, {4, 4, 1}});
    CHECK(canonical_form(sq) == canonical_form(cycle_graph(4)));

    CompatibilityGraph pent = cycle_graph(5);
    CompatibilityGraph prism5 = product(pent, seg);
    CHECK(prism5.dimension() == 3);
    CHECK(prism5.size() == 7);
    CHECK(f_polynomial(clique_f_vector(prism5)) ==
          f_polynomial(clique_f_vector(pent)) * f_polynomial(clique_f_vector(seg)));
    CHECK(graph_h_polynomial(prism5) == graph_h_polynomial(pent) * graph_h_polynomial(seg));
    CHECK(graph_gamma_polynomial(prism5) ==
          graph_gamma_polynomial(pent) * graph_gamma_polynomial(seg));
}

TEST_CASE("product label collisions are resolved") {
    CompatibilityGraph seg = segment_graph();
    CompatibilityGraph sq = product(seg, seg); // same labels on both sides
    std::vector<FacetLabel> ls = sq.labels();
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j) CHECK_FALSE(ls[i] == ls[j]);
}

TEST_CASE("decompose splits products and nothing else") {
    CompatibilityGraph sq = cycle_graph(4);
    auto factors = decompose(sq);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].dimension() == 1);
    CHECK(factors[1].dimension() == 1);
    CHECK(factors[0].size() == 2);

    auto pent_factors = decompose(cycle_graph(5));
    REQUIRE(pent_factors.size() == 1);
    CHECK(pent_factors[0].dimension() == 2);

    CompatibilityGraph point(0, {}, {});
    CHECK(decompose(point).empty());

    // segment x pentagon rebuilt from its own factors
    CompatibilityGraph prism5 = product(cycle_graph(5), segment_graph());
    auto fs = decompose(prism5);
    REQUIRE(fs.size() == 2);
    int dims[2] = {fs[0].dimension(), fs[1].dimension()};
    CHECK(dims[0] + dims[1] == 3);
    CHECK(std::min(dims[0], dims[1]) == 1);
}

TEST_CASE("decomposition dimensions come from the factors' own cliques") {
    // cube = segment^3: three segment factors
    CompatibilityGraph cube = product(product(segment_graph(), segment_graph()), segment_graph());
    auto fs = decompose(cube);
    REQUIRE(fs.size() == 3);
    for (const auto& f : fs) {
        CHECK(f.dimension() == 1);
        CHECK(f.size() == 2);
    }
}
