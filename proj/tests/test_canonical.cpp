#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "flagpoly/canonical.hpp"
#include "flagpoly/graph.hpp"

using namespace flagpoly;

namespace {

std::vector<FacetLabel> named(int count) {
    std::vector<FacetLabel> labels;
    for (int i = 0; i < count; ++i) labels.push_back(FacetLabel::derived("v" + std::to_string(i)));
    return labels;
}

CompatibilityGraph from_edges(int v, std::vector<std::pair<int, int>> edges, int dim = 1) {
    return CompatibilityGraph(dim, named(v), edges);
}

CompatibilityGraph from_mask(int v, unsigned mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b, ++bit)
            if (mask >> bit & 1) edges.emplace_back(a, b);
    return from_edges(v, std::move(edges));
}

CompatibilityGraph permuted(const CompatibilityGraph& g, const std::vector<int>& perm) {
    // vertex i of the new graph is perm[i] of the old one
    std::vector<FacetLabel> labels;
    for (std::size_t i = 0; i < g.size(); ++i) labels.push_back(g.label(perm[i]));
    std::vector<std::pair<int, int>> edges;
    std::vector<int> inv(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) inv[std::size_t(perm[i])] = int(i);
    for (auto [a, b] : g.edge_list())
        edges.emplace_back(std::min(inv[std::size_t(a)], inv[std::size_t(b)]),
                           std::max(inv[std::size_t(a)], inv[std::size_t(b)]));
    return CompatibilityGraph(g.dimension(), std::move(labels), edges);
}

// Exhaustive permutation search; the oracle canonical certificates must match.
bool brute_isomorphic(const CompatibilityGraph& a, const CompatibilityGraph& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i)
            for (std::size_t j = i + 1; j < a.size() && ok; ++j)
                if (a.adjacent(int(i), int(j)) !=
                    b.adjacent(perm[i], perm[j]))
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

CompatibilityGraph petersen() {
    // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
        edges.emplace_back(std::min(5 + i, 5 + (i + 2) % 5), std::max(5 + i, 5 + (i + 2) % 5));
        edges.emplace_back(i, i + 5);
    }
    return from_edges(10, std::move(edges));
}

CompatibilityGraph pentaprism() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
        edges.emplace_back(std::min(5 + i, 5 + (i + 1) % 5), std::max(5 + i, 5 + (i + 1) % 5));
        edges.emplace_back(i, i + 5);
    }
    return from_edges(10, std::move(edges));
}

} // namespace

TEST_CASE("certificate is invariant under relabeling") {
    std::mt19937 rng(13371337u);
    for (int trial = 0; trial < 40; ++trial) {
        int v = std::uniform_int_distribution<int>(1, 10)(rng);
        std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.15, 0.85)(rng));
        std::vector<std::pair<int, int>> random_edges;
        for (int a = 0; a < v; ++a)
            for (int b = a + 1; b < v; ++b)
                if (coin(rng)) random_edges.emplace_back(a, b);
        CompatibilityGraph g = from_edges(v, std::move(random_edges));
        std::vector<int> perm(static_cast<std::size_t>(v));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CompatibilityGraph h = permuted(g, perm);
        CHECK(canonical_form(g) == canonical_form(h));
    }
}

TEST_CASE("canonical order reproduces the certificate graph consistently") {
    CompatibilityGraph g = petersen();
    CanonicalResult r = canonical_labeling(g);
    CHECK(r.order.size() == g.size());
    std::vector<int> sorted = r.order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == int(i));
}

TEST_CASE("four-vertex graphs fall into exactly 11 classes") {
    std::set<std::string> certs;
    for (unsigned mask = 0; mask < 64; ++mask) certs.insert(canonical_form(from_mask(4, mask)));
    CHECK(certs.size() == 11);
}

TEST_CASE("certificate equality matches brute-force isomorphism on 4 vertices") {
    std::vector<CompatibilityGraph> graphs;
    for (unsigned mask = 0; mask < 64; ++mask) graphs.push_back(from_mask(4, mask));
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j) {
            bool certs_equal = canonical_form(graphs[i]) == canonical_form(graphs[j]);
            CHECK(certs_equal == brute_isomorphic(graphs[i], graphs[j]));
        }
}

TEST_CASE("regular non-isomorphic pairs are separated") {
    CompatibilityGraph c6 = from_mask(6, 0); // rebuilt below with explicit edges
    c6 = from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    CompatibilityGraph two_triangles = from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(canonical_form(c6) != canonical_form(two_triangles));
    CHECK_FALSE(isomorphism(c6, two_triangles).has_value());

    // both 3-regular on 10 vertices with 15 edges
    CHECK(canonical_form(petersen()) != canonical_form(pentaprism()));
    CHECK_FALSE(isomorphism(petersen(), pentaprism()).has_value());
}

TEST_CASE("isomorphism returns a verified bijection") {
    std::mt19937 rng(777u);
    CompatibilityGraph g = pentaprism();
    std::vector<int> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CompatibilityGraph h = permuted(g, perm);

    auto iso = isomorphism(g, h);
    REQUIRE(iso.has_value());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            CHECK(g.adjacent(int(i), int(j)) ==
                  h.adjacent((*iso)[i], (*iso)[j]));
}

TEST_CASE("empty and single-vertex graphs") {
    CompatibilityGraph point(0, {}, {});
    CompatibilityGraph one(1, named(1), {});
    CHECK(canonical_form(point) == canonical_form(CompatibilityGraph(0, {}, {})));
    CHECK(canonical_form(point) != canonical_form(one));
}
