#include "flagpoly/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "flagpoly/cliques.hpp"
#include "flagpoly/errors.hpp"

namespace flagpoly {

FacetLabel FacetLabel::adiag(int a, int b) {
    FacetLabel l;
    l.kind = Kind::ADiag;
    l.a = std::min(a, b);
    l.b = std::max(a, b);
    return l;
}

FacetLabel FacetLabel::dpair(int a, int b, int n) {
    const int m = 2 * n;
    auto norm = [&](int x, int y) {
        x = ((x % m) + m) % m;
        y = ((y % m) + m) % m;
        return std::pair<int, int>(std::min(x, y), std::max(x, y));
    };
    auto d = norm(a, b);
    auto anti = norm(a + n, b + n);
    if (anti < d) d = anti;
    FacetLabel l;
    l.kind = Kind::DPair;
    l.a = d.first;
    l.b = d.second;
    return l;
}

FacetLabel FacetLabel::ddiam(int endpoint, int color, int n) {
    FacetLabel l;
    l.kind = Kind::DDiam;
    l.a = ((endpoint % n) + n) % n; // store the endpoint below n
    l.color = color;
    return l;
}

FacetLabel FacetLabel::bset(std::uint64_t mask) {
    FacetLabel l;
    l.kind = Kind::BSet;
    l.mask = mask;
    return l;
}

FacetLabel FacetLabel::derived(std::string tag) {
    FacetLabel l;
    l.kind = Kind::Derived;
    l.tag = std::move(tag);
    return l;
}

std::string FacetLabel::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::ADiag: os << "A(" << a << "," << b << ")"; break;
        case Kind::DPair: os << "P(" << a << "," << b << ")"; break;
        case Kind::DDiam: os << "M(" << a << ";c" << color << ")"; break;
        case Kind::BSet: {
            os << "B{";
            bool first = true;
            for (int i = 0; i < 64; ++i)
                if ((mask >> i) & 1) {
                    if (!first) os << ",";
                    os << (i + 1);
                    first = false;
                }
            os << "}";
            break;
        }
        case Kind::Derived: os << "D[" << tag << "]"; break;
    }
    return os.str();
}

CompatibilityGraph::CompatibilityGraph(int dimension, std::vector<FacetLabel> labels,
                                       const std::vector<std::pair<int, int>>& edges)
    : dim_(dimension), labels_(std::move(labels)) {
    if (dim_ < 0) throw Error(ErrorKind::BadInput, "negative dimension");
    const std::size_t V = labels_.size();
    adj_.assign(V, Bitset64(V));
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || std::size_t(i) >= V || std::size_t(j) >= V)
            throw Error(ErrorKind::BadInput, "edge endpoint out of range");
        if (i == j) throw Error(ErrorKind::BadInput, "self-loop in adjacency");
        adj_[std::size_t(i)].set(std::size_t(j));
        adj_[std::size_t(j)].set(std::size_t(i));
    }
    std::vector<FacetLabel> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorKind::BadInput, "facet labels are not pairwise distinct");
}

int CompatibilityGraph::find_label(const FacetLabel& l) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == l) return int(i);
    return -1;
}

std::size_t CompatibilityGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

std::vector<std::pair<int, int>> CompatibilityGraph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < size(); ++i)
        for (int j = adj_[i].next_set(i + 1); j >= 0; j = adj_[i].next_set(std::size_t(j) + 1))
            edges.emplace_back(int(i), j);
    return edges;
}

bool simplicity_check(const CompatibilityGraph& g) {
    auto sizes = maximal_clique_sizes(g.adjacency());
    return sizes.size() == 1 && sizes.front() == g.dimension();
}

FVector clique_f_vector(const CompatibilityGraph& g) {
    if (!simplicity_check(g))
        throw Error(ErrorKind::SimplicityViolation,
                    "graph has a maximal clique of size != " + std::to_string(g.dimension()));
    const int n = g.dimension();
    auto counts = clique_counts(g.adjacency());
    FVector fv;
    fv.n = n;
    fv.f.assign(std::size_t(n) + 1, 0);
    for (int i = 0; i <= n; ++i) {
        const int k = n - i; // cliques of size k are faces of dimension i
        fv.f[std::size_t(i)] = k < int(counts.size()) ? counts[std::size_t(k)] : 0;
    }
    return fv;
}

CompatibilityGraph face_graph(const CompatibilityGraph& g, std::span<const int> clique) {
    const std::size_t V = g.size();
    std::set<int> members;
    for (int c : clique) {
        if (c < 0 || std::size_t(c) >= V)
            throw Error(ErrorKind::NotAClique, "clique member out of range");
        if (!members.insert(c).second)
            throw Error(ErrorKind::NotAClique, "repeated clique member");
    }
    for (int c1 : members)
        for (int c2 : members)
            if (c1 < c2 && !g.adjacent(c1, c2))
                throw Error(ErrorKind::NotAClique,
                            "facets " + std::to_string(c1) + " and " + std::to_string(c2) +
                                " do not intersect");

    Bitset64 common(V);
    for (std::size_t v = 0; v < V; ++v) common.set(v);
    for (int c : members) {
        common &= g.neighbors(c);
    }
    std::vector<int> keep;
    for (int v = common.next_set(0); v >= 0; v = common.next_set(std::size_t(v) + 1))
        keep.push_back(v);

    std::vector<FacetLabel> labels;
    labels.reserve(keep.size());
    for (int v : keep) labels.push_back(g.label(v));
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) edges.emplace_back(int(i), int(j));
    return CompatibilityGraph(g.dimension() - int(members.size()), std::move(labels), edges);
}

namespace {

// Right-hand labels that collide with already-used ones get wrapped; a
// counter suffix settles repeated collisions.
FacetLabel uniquified(const FacetLabel& l, const std::vector<FacetLabel>& used) {
    auto taken = [&](const FacetLabel& c) {
        return std::find(used.begin(), used.end(), c) != used.end();
    };
    if (!taken(l)) return l;
    FacetLabel wrapped = FacetLabel::derived("R." + l.to_string());
    int k = 2;
    while (taken(wrapped)) {
        wrapped = FacetLabel::derived("R." + l.to_string() + "#" + std::to_string(k));
        ++k;
    }
    return wrapped;
}

} // namespace

CompatibilityGraph product(const CompatibilityGraph& a, const CompatibilityGraph& b) {
    const std::size_t Va = a.size(), Vb = b.size();
    std::vector<FacetLabel> labels = a.labels();
    for (std::size_t j = 0; j < Vb; ++j) labels.push_back(uniquified(b.label(int(j)), labels));

    std::vector<std::pair<int, int>> edges = a.edge_list();
    for (auto [i, j] : b.edge_list()) edges.emplace_back(int(Va) + i, int(Va) + j);
    for (std::size_t i = 0; i < Va; ++i)
        for (std::size_t j = 0; j < Vb; ++j) edges.emplace_back(int(i), int(Va + j));
    return CompatibilityGraph(a.dimension() + b.dimension(), std::move(labels), edges);
}

std::vector<CompatibilityGraph> decompose(const CompatibilityGraph& g) {
    const std::size_t V = g.size();
    std::vector<int> comp(V, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < V; ++s) {
        if (comp[s] >= 0) continue;
        // BFS in the complement graph
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < V; ++v) {
                if (v == u || comp[v] >= 0 || g.adjacent(int(u), int(v))) continue;
                comp[v] = ncomp;
                stack.push_back(v);
            }
        }
        ++ncomp;
    }

    std::vector<CompatibilityGraph> factors;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> verts;
        for (std::size_t v = 0; v < V; ++v)
            if (comp[v] == c) verts.push_back(int(v));
        std::vector<FacetLabel> labels;
        for (int v : verts) labels.push_back(g.label(v));
        std::vector<std::pair<int, int>> edges;
        std::vector<Bitset64> sub(verts.size(), Bitset64(verts.size()));
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (g.adjacent(verts[i], verts[j])) {
                    edges.emplace_back(int(i), int(j));
                    sub[i].set(j);
                    sub[j].set(i);
                }
        factors.emplace_back(max_clique_size(sub), std::move(labels), edges);
    }
    return factors;
}

IntPolynomial graph_h_polynomial(const CompatibilityGraph& g) {
    return f_to_h(clique_f_vector(g));
}

IntPolynomial graph_gamma_polynomial(const CompatibilityGraph& g) {
    return h_to_gamma(graph_h_polynomial(g), g.dimension());
}

} // namespace flagpoly
