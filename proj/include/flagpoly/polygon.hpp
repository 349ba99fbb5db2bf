#pragma once

#include "flagpoly/graph.hpp"

namespace flagpoly {

// Diagonal of a regular m-gon with vertices 0..m-1 counterclockwise.
// Endpoints are distinct and non-adjacent; stored with a < b.
struct Diagonal {
    int a = 0;
    int b = 0;
    auto operator<=>(const Diagonal&) const = default;
};

Diagonal make_diagonal(int a, int b, int m); // throws InvalidDiagonal

// All diagonals of the m-gon, ordered by (a, b).
std::vector<Diagonal> all_diagonals(int m);

// True iff the two diagonals share an interior point. Sharing a polygon
// vertex does not count.
bool diagonals_cross(Diagonal d1, Diagonal d2, int m);

// Antipodal image {a+n, b+n} in the 2n-gon.
Diagonal antipode(Diagonal d, int n);

// Facet of the type-D model over the 2n-gon: either an antipodal pair of
// non-diameter diagonals (held by its canonical representative) or a
// colored diameter.
struct TypeDFacet {
    bool is_diameter = false;
    Diagonal diag;  // pair: canonical representative; diameter: {a, a+n}
    int color = 0;  // diameter only

    static TypeDFacet pair(Diagonal representative);
    static TypeDFacet diameter(int endpoint, int color, int n);
};

// Intersection rule of the type-D model: pair/pair and pair/diameter
// require no crossings; diameter/diameter requires equal colors or equal
// endpoints.
bool compatible_type_d(const TypeDFacet& f1, const TypeDFacet& f2, int n);

// Associahedron model: facets are diagonals of the (n+3)-gon, compatible
// when non-crossing. n(n+3)/2 facets.
CompatibilityGraph build_type_a(int n);

// Type-D model over the 2n-gon: n(n-2) antipodal pairs plus 2n colored
// diameters, n^2 facets total. Requires n >= 2.
CompatibilityGraph build_type_d(int n);

} // namespace flagpoly
