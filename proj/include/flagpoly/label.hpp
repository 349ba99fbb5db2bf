#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace flagpoly {

// Tagged facet label. A label never affects graph algorithms; it records
// where a facet came from (polygon diagonal, diagonal pair, colored
// diameter, building-set member, or a product/shave construction).
struct FacetLabel {
    enum class Kind { ADiag, DPair, DDiam, BSet, Derived };

    Kind kind = Kind::Derived;
    int a = 0;             // adiag/dpair: smaller endpoint; ddiam: endpoint < n
    int b = 0;             // adiag/dpair: larger endpoint
    int color = 0;         // ddiam
    std::uint64_t mask = 0; // bset: ground-subset bitmask
    std::string tag;       // derived

    static FacetLabel adiag(int a, int b);
    // Stores the lexicographically smaller of the diagonal and its antipode
    // in the 2n-gon.
    static FacetLabel dpair(int a, int b, int n);
    static FacetLabel ddiam(int endpoint, int color, int n);
    static FacetLabel bset(std::uint64_t mask);
    static FacetLabel derived(std::string tag);

    std::string to_string() const;

    auto operator<=>(const FacetLabel&) const = default;
};

} // namespace flagpoly
