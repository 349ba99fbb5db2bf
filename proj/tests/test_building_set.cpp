#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "flagpoly/building_set.hpp"
#include "flagpoly/canonical.hpp"
#include "flagpoly/graph.hpp"
#include "flagpoly/polygon.hpp"

using namespace flagpoly;

namespace {

Mask mask_of(std::initializer_list<int> elements) {
    Mask m = 0;
    for (int e : elements) m |= Mask(1) << (e - 1);
    return m;
}

CompatibilityGraph cycle_graph(int m) {
    std::vector<FacetLabel> labels;
    for (int i = 0; i < m; ++i) labels.push_back(FacetLabel::derived("e" + std::to_string(i)));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        edges.emplace_back(std::min(i, (i + 1) % m), std::max(i, (i + 1) % m));
    return CompatibilityGraph(2, labels, edges);
}

} // namespace

TEST_CASE("construction and membership") {
    BuildingSet b(3, {mask_of({1}), mask_of({2}), mask_of({3}), mask_of({1, 2}), mask_of({1, 2, 3})});
    CHECK(b.full() == 0b111);
    CHECK(b.contains(mask_of({1, 2})));
    CHECK_FALSE(b.contains(mask_of({2, 3})));
    CHECK(b.proper_sets().size() == 4);

    CHECK_THROWS_AS(BuildingSet(0, {}), Error);
    CHECK_THROWS_AS(BuildingSet(64, {1}), Error);
    CHECK_THROWS_AS(BuildingSet(3, {0}), Error);              // empty member
    CHECK_THROWS_AS(BuildingSet(3, {0b1000}), Error);         // out of range
    CHECK_THROWS_AS(BuildingSet(3, {1, 1}), Error);           // duplicate
}

TEST_CASE("validation diagnostics") {
    std::string why;

    BuildingSet ok(3, {1, 2, 4, 0b011, 0b111});
    CHECK(validate_building_set(ok, &why));
    CHECK(why.empty());

    BuildingSet no_singleton(3, {1, 2, 0b011, 0b111});
    CHECK_FALSE(validate_building_set(no_singleton, &why));
    CHECK(why.find("singleton") != std::string::npos);

    BuildingSet no_union(4, {1, 2, 4, 8, 0b0011, 0b0110, 0b1111});
    CHECK_FALSE(validate_building_set(no_union, &why));
    CHECK(why.find("union") != std::string::npos);

    BuildingSet disconnected(3, {1, 2, 4, 0b011});
    CHECK_FALSE(validate_building_set(disconnected, &why));
    CHECK(why.find("not connected") != std::string::npos);
}

TEST_CASE("path and cycle generators") {
    BuildingSet p3 = path_building_set(3);
    CHECK(p3.sets.size() == 6); // all intervals of 1-2-3
    CHECK(validate_building_set(p3));
    for (int m = 2; m <= 6; ++m)
        CHECK(path_building_set(m).sets.size() == std::size_t(m * (m + 1) / 2));

    BuildingSet c4 = cycle_building_set(4);
    CHECK(validate_building_set(c4));
    CHECK(c4.sets.size() == std::size_t(4 * 3 + 1)); // m(m-1) arcs + full set
    CHECK_THROWS_AS(cycle_building_set(2), Error);
}

TEST_CASE("graphical building sets") {
    // star with center 1 and leaves 2, 3, 4
    BuildingSet star = graph_building_set(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(star.sets.size() == 11); // 8 center-containing subsets + 3 leaves
    CHECK(validate_building_set(star));
    CHECK(flagness_check(star));

    CHECK_THROWS_AS(graph_building_set(3, {{0, 1}}), Error);          // disconnected
    CHECK_THROWS_AS(graph_building_set(2, {{0, 5}}), Error);          // bad edge
    CHECK_THROWS_AS(graph_building_set(30, {}), Error);               // too large

    // the path graph generator agrees with the interval generator
    BuildingSet via_graph = graph_building_set(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(via_graph.sets == path_building_set(4).sets);
}

TEST_CASE("flagness") {
    CHECK(flagness_check(path_building_set(5)));
    CHECK(flagness_check(cycle_building_set(5)));

    // singletons + full set only: the simplex, the minimal non-flag example
    BuildingSet simplex(3, {1, 2, 4, 0b111});
    CHECK(validate_building_set(simplex));
    CHECK_FALSE(flagness_check(simplex));

    // same shape one rank up
    BuildingSet simplex4(4, {1, 2, 4, 8, 0b1111});
    CHECK_FALSE(flagness_check(simplex4));

    // adding one pair breaks the witness on [3]
    BuildingSet square(3, {1, 2, 4, 0b011, 0b111});
    CHECK(flagness_check(square));
}

TEST_CASE("nested complex f-vectors") {
    // the simplex: nested sets are proper subsets of the singleton family
    BuildingSet simplex(3, {1, 2, 4, 0b111});
    CHECK(nested_complex_f_vector(simplex) == FVector{2, {3, 3, 1}});

    // pentagon
    CHECK(nested_complex_f_vector(path_building_set(3)) == FVector{2, {5, 5, 1}});

    // hexagon
    CHECK(nested_complex_f_vector(cycle_building_set(3)) == FVector{2, {6, 6, 1}});

    // 3-dimensional associahedron via intervals
    CHECK(nested_complex_f_vector(path_building_set(4)) == FVector{3, {14, 21, 9, 1}});

    // permutohedron of the complete graph on [4]: 2^4 - 2 facets, 4! vertices
    std::vector<std::pair<int, int>> k4;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) k4.emplace_back(a, b);
    FVector perm = nested_complex_f_vector(graph_building_set(4, k4));
    CHECK(perm == FVector{3, {24, 36, 14, 1}});
}

TEST_CASE("nestohedron graphs match polygon models") {
    CHECK(canonical_form(nestohedron_graph(path_building_set(3))) ==
          canonical_form(build_type_a(2)));
    CHECK(canonical_form(nestohedron_graph(path_building_set(4))) ==
          canonical_form(build_type_a(3)));
    CHECK(canonical_form(nestohedron_graph(cycle_building_set(3))) ==
          canonical_form(cycle_graph(6)));

    BuildingSet simplex(3, {1, 2, 4, 0b111});
    CHECK_THROWS_AS(nestohedron_graph(simplex), Error);
}

TEST_CASE("nestohedron graph edges are two-element nested sets") {
    BuildingSet p3 = path_building_set(3);
    CompatibilityGraph g = nestohedron_graph(p3);
    REQUIRE(g.size() == 5);
    auto idx = [&](Mask m) { return g.find_label(FacetLabel::bset(m)); };
    // {1} and {2} union to {1,2} which is a member: not nested
    CHECK_FALSE(g.adjacent(idx(mask_of({1})), idx(mask_of({2}))));
    // {1} and {3} union to {1,3} which is not a member: nested (disjoint)
    CHECK(g.adjacent(idx(mask_of({1})), idx(mask_of({3}))));
    // {1} inside {1,2}: nested
    CHECK(g.adjacent(idx(mask_of({1})), idx(mask_of({1, 2}))));
    // {1,2} and {2,3} intersect without nesting
    CHECK_FALSE(g.adjacent(idx(mask_of({1, 2})), idx(mask_of({2, 3}))));
}

TEST_CASE("restriction and contraction") {
    BuildingSet p4 = path_building_set(4);

    auto r = restriction(p4, mask_of({2, 3}));
    CHECK(r.b.ground == 2);
    CHECK(r.b.sets == std::vector<Mask>{1, 2, 3});
    CHECK(r.ground_map == std::vector<int>{1, 2});

    auto c = contraction(p4, mask_of({2, 3}));
    CHECK(c.b.ground == 2);
    CHECK(c.b.sets == std::vector<Mask>{1, 2, 3});
    CHECK(c.ground_map == std::vector<int>{0, 3});

    CHECK_THROWS_AS(restriction(p4, mask_of({1, 3})), Error);  // not a member
    CHECK_THROWS_AS(restriction(p4, p4.full()), Error);        // full set
    CHECK_THROWS_AS(contraction(p4, p4.full()), Error);
}

TEST_CASE("restriction keeps only inside members, contraction quotients") {
    BuildingSet star = graph_building_set(4, {{0, 1}, {0, 2}, {0, 3}});
    Mask s = mask_of({1, 2}); // center + one leaf
    auto r = restriction(star, s);
    CHECK(r.b.ground == 2);
    CHECK(validate_building_set(r.b));
    auto c = contraction(star, s);
    CHECK(c.b.ground == 2);
    CHECK(validate_building_set(c.b));
    // contracting the center makes the two remaining leaves join directly
    CHECK(c.b.contains(0b11));
}

TEST_CASE("boundary formula shape") {
    BuildingSet p4 = path_building_set(4);
    auto terms = boundary_formula(p4);
    CHECK(terms.size() == 9);
    for (const auto& t : terms) {
        CHECK(validate_building_set(t.restricted.b));
        CHECK(validate_building_set(t.contracted.b));
        int facet_dim = t.restricted.b.ground - 1 + t.contracted.b.ground - 1;
        CHECK(facet_dim == 2);
    }
}

TEST_CASE("facet product identity on small building sets") {
    for (const BuildingSet& b : enumerate_connected_building_sets(4)) {
        if (!flagness_check(b)) continue;
        CompatibilityGraph g = nestohedron_graph(b);
        auto terms = boundary_formula(b);
        REQUIRE(terms.size() == g.size());
        for (std::size_t f = 0; f < terms.size(); ++f) {
            const int face[] = {int(f)};
            IntPolynomial lhs = f_polynomial(clique_f_vector(face_graph(g, face)));
            IntPolynomial rhs = f_polynomial(nested_complex_f_vector(terms[f].restricted.b)) *
                                f_polynomial(nested_complex_f_vector(terms[f].contracted.b));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_connected_building_sets(1).size() == 1);
    CHECK(enumerate_connected_building_sets(2).size() == 1);
    CHECK(enumerate_connected_building_sets(3).size() == 8);

    auto on4 = enumerate_connected_building_sets(4);
    CHECK(on4.size() == 378);
    int flag = 0;
    for (const auto& b : on4) {
        CHECK(validate_building_set(b));
        if (flagness_check(b)) ++flag;
    }
    CHECK(flag == 232);

    // distinct and deterministic
    std::set<std::vector<Mask>> seen;
    for (const auto& b : on4) CHECK(seen.insert(b.sets).second);

    CHECK_THROWS_AS(enumerate_connected_building_sets(6), Error);
}

TEST_CASE("non-nestohedron certificates") {
    auto cert4 = non_nestohedron_certificate(build_type_d(4));
    REQUIRE(cert4.has_value());
    CHECK(cert4->dimension == 4);
    CHECK(cert4->required == 11);
    CHECK(cert4->indecomposable_facets.size() == 12);

    CHECK_FALSE(non_nestohedron_certificate(build_type_a(4)).has_value());
    CHECK_FALSE(non_nestohedron_certificate(build_type_a(3)).has_value());
    CHECK_FALSE(non_nestohedron_certificate(cycle_graph(4)).has_value());
    CHECK_FALSE(non_nestohedron_certificate(nestohedron_graph(path_building_set(4))).has_value());
}

TEST_CASE("nestohedra of every small flag building set look like flag polytopes") {
    for (const BuildingSet& b : enumerate_connected_building_sets(3)) {
        if (!flagness_check(b)) continue;
        CompatibilityGraph g = nestohedron_graph(b);
        CHECK(simplicity_check(g));
        CHECK(g.dimension() == 2);
        CHECK(is_palindromic(graph_h_polynomial(g), 2));
        CHECK(clique_f_vector(g) == nested_complex_f_vector(b));
    }
}
