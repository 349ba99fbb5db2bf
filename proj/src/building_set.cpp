#include "flagpoly/building_set.hpp"

#include <algorithm>
#include <bit>

#include "flagpoly/errors.hpp"

namespace flagpoly {

namespace {

std::string mask_to_string(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 64; ++i)
        if (m >> i & 1) {
            if (!first) s += ',';
            s += std::to_string(i + 1);
            first = false;
        }
    return s + "}";
}

// Two members form a face of the nested complex: nested, or disjoint with a
// union outside B.
bool pair_compatible(Mask x, Mask y, const BuildingSet& b) {
    if ((x & y) == 0) return !b.contains(x | y);
    return (x | y) == x || (x | y) == y;
}

// Does any pairwise-disjoint subfamily of `family` that includes the set
// with union `base` extend to a union lying in B? `family` is
// pairwise-nested-or-disjoint; candidates must avoid everything already in
// the union.
bool disjoint_union_hits(const std::vector<Mask>& family, std::size_t upto, Mask base,
                         const BuildingSet& b) {
    for (std::size_t i = 0; i < upto; ++i) {
        Mask y = family[i];
        if (y & base) continue;
        if (b.contains(base | y)) return true;
        if (disjoint_union_hits(family, i, base | y, b)) return true;
    }
    return false;
}

// Can x be appended to the nested set `family`?
bool extends_nested(const std::vector<Mask>& family, Mask x, const BuildingSet& b) {
    for (Mask y : family) {
        Mask u = x | y;
        if ((x & y) != 0 && u != x && u != y) return false; // overlapping, not nested
    }
    // no pairwise-disjoint subfamily containing x may union into B
    return !disjoint_union_hits(family, family.size(), x, b);
}

void count_nested(const std::vector<Mask>& members, std::size_t start, std::vector<Mask>& family,
                  const BuildingSet& b, std::vector<std::int64_t>& counts) {
    counts[family.size()] += 1;
    for (std::size_t j = start; j < members.size(); ++j) {
        if (!extends_nested(family, members[j], b)) continue;
        family.push_back(members[j]);
        count_nested(members, j + 1, family, b, counts);
        family.pop_back();
    }
}

// Searches for >= 3 pairwise-disjoint members, pairwise unions outside B,
// total union in B: the only way a clique of the 1-skeleton can fail to be a
// nested set.
bool flagness_witness(const std::vector<Mask>& members, std::size_t start,
                      std::vector<Mask>& picked, Mask uni, const BuildingSet& b) {
    for (std::size_t j = start; j < members.size(); ++j) {
        Mask x = members[j];
        if (x & uni) continue;
        bool union_free = true;
        for (Mask y : picked)
            if (b.contains(x | y)) {
                union_free = false;
                break;
            }
        if (!union_free) continue;
        if (picked.size() >= 2 && b.contains(uni | x)) return true;
        picked.push_back(x);
        if (flagness_witness(members, j + 1, picked, uni | x, b)) return true;
        picked.pop_back();
    }
    return false;
}

Mask remap_mask(Mask m, const int pos[64]) {
    Mask r = 0;
    for (int i = 0; i < 64; ++i)
        if (m >> i & 1) r |= Mask(1) << pos[i];
    return r;
}

// Dense re-indexing of a sub-ground `keep` of b's ground set.
ReindexedBuildingSet reindex(std::vector<Mask> sets, Mask keep) {
    std::vector<int> ground_map;
    int pos[64] = {};
    for (int i = 0; i < 64; ++i)
        if (keep >> i & 1) {
            pos[i] = int(ground_map.size());
            ground_map.push_back(i);
        }
    for (Mask& m : sets) m = remap_mask(m, pos);
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    ReindexedBuildingSet out;
    out.b = BuildingSet(int(ground_map.size()), std::move(sets));
    out.ground_map = std::move(ground_map);
    return out;
}

void require_member_below_full(const BuildingSet& b, Mask s) {
    if (s == b.full()) throw Error(ErrorKind::FullSet, "cannot restrict or contract by the full set");
    if (!b.contains(s))
        throw Error(ErrorKind::NotAMember, mask_to_string(s) + " is not a member of the building set");
}

} // namespace

BuildingSet::BuildingSet(int ground, std::vector<Mask> sets) : ground(ground), sets(std::move(sets)) {
    if (ground < 1 || ground > 63)
        throw Error(ErrorKind::BadInput, "ground size must be between 1 and 63");
    for (Mask m : this->sets) {
        if (m == 0) throw Error(ErrorKind::BadInput, "building set contains the empty set");
        if (m & ~full())
            throw Error(ErrorKind::BadInput,
                        "set " + mask_to_string(m) + " leaves the ground set of size " +
                            std::to_string(ground));
    }
    std::sort(this->sets.begin(), this->sets.end());
    if (std::adjacent_find(this->sets.begin(), this->sets.end()) != this->sets.end())
        throw Error(ErrorKind::BadInput, "building set members must be distinct");
}

bool BuildingSet::contains(Mask m) const {
    return std::binary_search(sets.begin(), sets.end(), m);
}

std::vector<Mask> BuildingSet::proper_sets() const {
    std::vector<Mask> out;
    out.reserve(sets.size());
    for (Mask m : sets)
        if (m != full()) out.push_back(m);
    return out;
}

bool validate_building_set(const BuildingSet& b, std::string* diagnostic) {
    auto fail = [&](const std::string& why) {
        if (diagnostic) *diagnostic = why;
        return false;
    };
    for (int i = 0; i < b.ground; ++i)
        if (!b.contains(Mask(1) << i)) return fail("missing singleton {" + std::to_string(i + 1) + "}");
    if (!b.contains(b.full())) return fail("full set missing (building set is not connected)");
    for (std::size_t i = 0; i < b.sets.size(); ++i)
        for (std::size_t j = i + 1; j < b.sets.size(); ++j) {
            Mask x = b.sets[i], y = b.sets[j];
            if ((x & y) != 0 && !b.contains(x | y))
                return fail("union of intersecting members " + mask_to_string(x) + " and " +
                            mask_to_string(y) + " is missing");
        }
    if (diagnostic) diagnostic->clear();
    return true;
}

ReindexedBuildingSet restriction(const BuildingSet& b, Mask s) {
    require_member_below_full(b, s);
    std::vector<Mask> kept;
    for (Mask m : b.sets)
        if ((m & ~s) == 0) kept.push_back(m);
    ReindexedBuildingSet out = reindex(std::move(kept), s);
    std::string diag;
    if (!validate_building_set(out.b, &diag))
        throw Error(ErrorKind::InvalidBuildingSet, "restriction is not a building set: " + diag);
    return out;
}

ReindexedBuildingSet contraction(const BuildingSet& b, Mask s) {
    require_member_below_full(b, s);
    std::vector<Mask> diffs;
    for (Mask m : b.sets)
        if (Mask t = m & ~s; t != 0) diffs.push_back(t);
    ReindexedBuildingSet out = reindex(std::move(diffs), b.full() & ~s);
    std::string diag;
    if (!validate_building_set(out.b, &diag))
        throw Error(ErrorKind::InvalidBuildingSet, "contraction is not a building set: " + diag);
    return out;
}

FVector nested_complex_f_vector(const BuildingSet& b) {
    std::string diag;
    if (!validate_building_set(b, &diag)) throw Error(ErrorKind::InvalidBuildingSet, diag);
    const int n = b.ground - 1;
    std::vector<Mask> members = b.proper_sets();
    std::vector<std::int64_t> counts(members.size() + 1, 0);
    std::vector<Mask> family;
    count_nested(members, 0, family, b, counts);
    for (std::size_t k = std::size_t(n) + 1; k < counts.size(); ++k)
        if (counts[k] != 0)
            throw Error(ErrorKind::SimplicityViolation,
                        "nested complex has a face above the polytope dimension");
    FVector fv;
    fv.n = n;
    fv.f.assign(std::size_t(n) + 1, 0);
    for (int i = 0; i <= n; ++i) fv.f[std::size_t(i)] = counts[std::size_t(n - i)];
    return fv;
}

bool flagness_check(const BuildingSet& b) {
    std::string diag;
    if (!validate_building_set(b, &diag)) throw Error(ErrorKind::InvalidBuildingSet, diag);
    std::vector<Mask> members = b.proper_sets();
    std::vector<Mask> picked;
    return !flagness_witness(members, 0, picked, 0, b);
}

CompatibilityGraph nestohedron_graph(const BuildingSet& b) {
    std::string diag;
    if (!validate_building_set(b, &diag)) throw Error(ErrorKind::InvalidBuildingSet, diag);
    if (!flagness_check(b))
        throw Error(ErrorKind::NotFlag,
                    "building set is not flag; its polytope is not determined by facet pairs");
    std::vector<Mask> members = b.proper_sets();
    std::vector<FacetLabel> labels;
    labels.reserve(members.size());
    for (Mask m : members) labels.push_back(FacetLabel::bset(m));
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (pair_compatible(members[i], members[j], b)) edges.emplace_back(int(i), int(j));
    CompatibilityGraph g(b.ground - 1, std::move(labels), edges);
    if (!simplicity_check(g))
        throw Error(ErrorKind::SimplicityViolation, "nestohedron graph failed the simplicity guard");
    return g;
}

BuildingSet graph_building_set(int vertices, const std::vector<std::pair<int, int>>& edges) {
    if (vertices < 1 || vertices > 20)
        throw Error(ErrorKind::BadInput, "graph building sets support 1..20 vertices");
    std::vector<Mask> adjm(std::size_t(vertices), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertices || v >= vertices || u == v)
            throw Error(ErrorKind::BadInput, "bad edge in graph building set input");
        adjm[std::size_t(u)] |= Mask(1) << v;
        adjm[std::size_t(v)] |= Mask(1) << u;
    }
    auto connected_within = [&](Mask m) {
        Mask seen = m & (~m + 1); // lowest set bit
        for (;;) {
            Mask grow = seen;
            Mask rest = seen;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                grow |= adjm[std::size_t(v)] & m;
            }
            if (grow == seen) break;
            seen = grow;
        }
        return seen == m;
    };
    const Mask full = (Mask(1) << vertices) - 1;
    if (!connected_within(full))
        throw Error(ErrorKind::Disconnected, "graph building sets require a connected graph");
    std::vector<Mask> sets;
    for (Mask m = 1; m <= full; ++m)
        if (connected_within(m)) sets.push_back(m);
    return BuildingSet(vertices, std::move(sets));
}

BuildingSet path_building_set(int ground) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < ground; ++i) edges.emplace_back(i, i + 1);
    return graph_building_set(ground, edges);
}

BuildingSet cycle_building_set(int ground) {
    if (ground < 3) throw Error(ErrorKind::BadInput, "cycle building sets require ground >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < ground; ++i) edges.emplace_back(i, (i + 1) % ground);
    return graph_building_set(ground, edges);
}

std::vector<BoundaryTerm> boundary_formula(const BuildingSet& b) {
    std::string diag;
    if (!validate_building_set(b, &diag)) throw Error(ErrorKind::InvalidBuildingSet, diag);
    std::vector<BoundaryTerm> terms;
    for (Mask s : b.proper_sets())
        terms.push_back(BoundaryTerm{s, restriction(b, s), contraction(b, s)});
    return terms;
}

std::optional<Prop2Certificate> non_nestohedron_certificate(const CompatibilityGraph& g) {
    if (!simplicity_check(g))
        throw Error(ErrorKind::SimplicityViolation, "certificate requires a simple polytope graph");
    if (decompose(g).size() != 1) return std::nullopt; // decomposable (or a point)
    const int n = g.dimension();
    Prop2Certificate cert;
    cert.dimension = n;
    cert.required = 2 * n + 3;
    for (int f = 0; f < int(g.size()); ++f) {
        const int clique[1] = {f};
        if (decompose(face_graph(g, clique)).size() == 1) cert.indecomposable_facets.push_back(f);
    }
    if (int(cert.indecomposable_facets.size()) < cert.required) return std::nullopt;
    return cert;
}

namespace {

struct ClosureEnumerator {
    int ground;
    Mask full;
    std::vector<Mask> cand;       // masks with >= 2 elements, below full, ascending
    std::vector<int> index_of;    // mask -> candidate index, -1 otherwise
    const std::function<void(const BuildingSet&)>* visit;

    void emit(std::uint32_t chosen) {
        std::vector<Mask> sets;
        for (int i = 0; i < ground; ++i) sets.push_back(Mask(1) << i);
        for (std::size_t i = 0; i < cand.size(); ++i)
            if (chosen >> i & 1) sets.push_back(cand[i]);
        if (ground > 1) sets.push_back(full); // on one element, full == the singleton
        (*visit)(BuildingSet(ground, std::move(sets)));
    }

    // Include/exclude each candidate in ascending mask order. Unions forced
    // by the closure axiom always have strictly larger masks, so they land at
    // later indices and `forced` only ever refers forward.
    void rec(std::size_t i, std::uint32_t chosen, std::uint32_t forced) {
        if (i == cand.size()) {
            emit(chosen);
            return;
        }
        if (!(forced >> i & 1)) rec(i + 1, chosen, forced);
        std::uint32_t nf = forced;
        std::uint32_t rest = chosen;
        while (rest) {
            int j = std::countr_zero(rest);
            rest &= rest - 1;
            if ((cand[i] & cand[std::size_t(j)]) == 0) continue;
            Mask u = cand[i] | cand[std::size_t(j)];
            if (u == full) continue;
            int k = index_of[std::size_t(u)];
            if (k > int(i)) nf |= std::uint32_t(1) << k;
        }
        rec(i + 1, chosen | (std::uint32_t(1) << i), nf);
    }
};

} // namespace

void enumerate_connected_building_sets(int ground,
                                       const std::function<void(const BuildingSet&)>& visit) {
    if (ground < 1 || ground > 5)
        throw Error(ErrorKind::BadInput, "exhaustive enumeration supports ground sizes 1..5");
    ClosureEnumerator e;
    e.ground = ground;
    e.full = (Mask(1) << ground) - 1;
    e.index_of.assign(std::size_t(e.full) + 1, -1);
    for (Mask m = 1; m < e.full; ++m)
        if (std::popcount(m) >= 2) {
            e.index_of[std::size_t(m)] = int(e.cand.size());
            e.cand.push_back(m);
        }
    e.visit = &visit;
    e.rec(0, 0, 0);
}

std::vector<BuildingSet> enumerate_connected_building_sets(int ground) {
    std::vector<BuildingSet> out;
    enumerate_connected_building_sets(ground, [&](const BuildingSet& b) { out.push_back(b); });
    return out;
}

} // namespace flagpoly
