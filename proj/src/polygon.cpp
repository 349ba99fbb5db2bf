#include "flagpoly/polygon.hpp"

#include <algorithm>

#include "flagpoly/errors.hpp"

namespace flagpoly {

Diagonal make_diagonal(int a, int b, int m) {
    if (m < 4) throw Error(ErrorKind::InvalidDiagonal, "polygon has no diagonals");
    if (a < 0 || b < 0 || a >= m || b >= m)
        throw Error(ErrorKind::InvalidDiagonal, "vertex index out of range");
    if (a == b) throw Error(ErrorKind::InvalidDiagonal, "degenerate diagonal");
    int lo = std::min(a, b), hi = std::max(a, b);
    int gap = hi - lo;
    if (gap == 1 || gap == m - 1)
        throw Error(ErrorKind::InvalidDiagonal, "endpoints are adjacent polygon vertices");
    return Diagonal{lo, hi};
}

std::vector<Diagonal> all_diagonals(int m) {
    std::vector<Diagonal> out;
    for (int a = 0; a < m; ++a)
        for (int b = a + 2; b < m; ++b) {
            if (a == 0 && b == m - 1) continue; // adjacent around the wrap
            out.push_back(Diagonal{a, b});
        }
    return out;
}

bool diagonals_cross(Diagonal d1, Diagonal d2, int m) {
    // shared endpoints never cross
    if (d1.a == d2.a || d1.a == d2.b || d1.b == d2.a || d1.b == d2.b) return false;
    // cyclic separation: exactly one endpoint of d2 strictly inside the arc a->b
    auto inside = [m](int x, int a, int b) {
        int arc = ((b - a) % m + m) % m;
        int off = ((x - a) % m + m) % m;
        return off > 0 && off < arc;
    };
    return inside(d2.a, d1.a, d1.b) != inside(d2.b, d1.a, d1.b);
}

Diagonal antipode(Diagonal d, int n) {
    const int m = 2 * n;
    int a = (d.a + n) % m, b = (d.b + n) % m;
    return Diagonal{std::min(a, b), std::max(a, b)};
}

TypeDFacet TypeDFacet::pair(Diagonal representative) {
    TypeDFacet f;
    f.is_diameter = false;
    f.diag = representative;
    return f;
}

TypeDFacet TypeDFacet::diameter(int endpoint, int color, int n) {
    TypeDFacet f;
    f.is_diameter = true;
    int a = ((endpoint % n) + n) % n;
    f.diag = Diagonal{a, a + n};
    f.color = color;
    return f;
}

bool compatible_type_d(const TypeDFacet& f1, const TypeDFacet& f2, int n) {
    const int m = 2 * n;
    if (f1.is_diameter && f2.is_diameter) {
        if (f1.color == f2.color) return true;
        return f1.diag == f2.diag; // different colors: same antipodal points only
    }
    if (!f1.is_diameter && !f2.is_diameter) {
        Diagonal a1 = f1.diag, a2 = antipode(a1, n);
        Diagonal b1 = f2.diag, b2 = antipode(b1, n);
        return !diagonals_cross(a1, b1, m) && !diagonals_cross(a1, b2, m) &&
               !diagonals_cross(a2, b1, m) && !diagonals_cross(a2, b2, m);
    }
    const TypeDFacet& pair = f1.is_diameter ? f2 : f1;
    const TypeDFacet& diam = f1.is_diameter ? f1 : f2;
    Diagonal p1 = pair.diag, p2 = antipode(p1, n);
    return !diagonals_cross(diam.diag, p1, m) && !diagonals_cross(diam.diag, p2, m);
}

CompatibilityGraph build_type_a(int n) {
    if (n < 0) throw Error(ErrorKind::InvalidRank, "type A rank must be >= 0");
    const int m = n + 3;
    auto diags = all_diagonals(m);
    std::vector<FacetLabel> labels;
    labels.reserve(diags.size());
    for (const Diagonal& d : diags) labels.push_back(FacetLabel::adiag(d.a, d.b));
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < diags.size(); ++i)
        for (std::size_t j = i + 1; j < diags.size(); ++j)
            if (!diagonals_cross(diags[i], diags[j], m)) edges.emplace_back(int(i), int(j));
    CompatibilityGraph g(n, std::move(labels), edges);
    if (!simplicity_check(g))
        throw Error(ErrorKind::SimplicityViolation, "type A model failed the simplicity guard");
    return g;
}

CompatibilityGraph build_type_d(int n) {
    if (n < 2) throw Error(ErrorKind::InvalidRank, "type D rank must be >= 2");
    const int m = 2 * n;

    std::vector<TypeDFacet> facets;
    std::vector<Diagonal> seen;
    for (const Diagonal& d : all_diagonals(m)) {
        if (d.b - d.a == n) continue; // diameter
        Diagonal anti = antipode(d, n);
        if (std::find(seen.begin(), seen.end(), d) != seen.end()) continue;
        seen.push_back(d);
        seen.push_back(anti);
        facets.push_back(TypeDFacet::pair(std::min(d, anti)));
    }
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < 2; ++c) facets.push_back(TypeDFacet::diameter(a, c, n));

    std::vector<FacetLabel> labels;
    labels.reserve(facets.size());
    for (const TypeDFacet& f : facets)
        labels.push_back(f.is_diameter ? FacetLabel::ddiam(f.diag.a, f.color, n)
                                       : FacetLabel::dpair(f.diag.a, f.diag.b, n));

    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = i + 1; j < facets.size(); ++j)
            if (compatible_type_d(facets[i], facets[j], n)) edges.emplace_back(int(i), int(j));
    CompatibilityGraph g(n, std::move(labels), edges);
    if (!simplicity_check(g))
        throw Error(ErrorKind::SimplicityViolation, "type D model failed the simplicity guard");
    return g;
}

} // namespace flagpoly
