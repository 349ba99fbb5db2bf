#include "flagpoly/canonical.hpp"

#include <algorithm>
#include <map>

namespace flagpoly {

namespace {

// One-dimensional refinement: split color classes by the multiset of
// neighbor colors until the partition stabilizes. New color ids follow the
// sorted signature order, which keeps cell order deterministic.
void refine_colors(const CompatibilityGraph& g, std::vector<int>& color) {
    const std::size_t V = g.size();
    if (V == 0) return;
    int ncolors = 1 + *std::max_element(color.begin(), color.end());
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(V); // (signature, vertex)
        for (std::size_t v = 0; v < V; ++v) {
            std::vector<int> s;
            s.push_back(color[v]);
            const Bitset64& nb = g.neighbors(int(v));
            std::vector<int> ncols;
            for (int u = nb.next_set(0); u >= 0; u = nb.next_set(std::size_t(u) + 1))
                ncols.push_back(color[std::size_t(u)]);
            std::sort(ncols.begin(), ncols.end());
            s.insert(s.end(), ncols.begin(), ncols.end());
            sig[v] = {std::move(s), int(v)};
        }
        std::map<std::vector<int>, int> ids;
        for (const auto& [s, v] : sig) ids.emplace(s, 0);
        int next = 0;
        for (auto& [s, id] : ids) id = next++;
        for (const auto& [s, v] : sig) color[std::size_t(v)] = ids[s];
        if (next == ncolors) return; // partition unchanged
        ncolors = next;
    }
}

std::string encode_in_order(const CompatibilityGraph& g, const std::vector<int>& order) {
    const std::size_t V = order.size();
    std::string bits;
    bits.reserve(V * V / 8 + 8);
    unsigned acc = 0;
    int nacc = 0;
    static const char* hexdig = "0123456789abcdef";
    for (std::size_t i = 0; i < V; ++i)
        for (std::size_t j = i + 1; j < V; ++j) {
            acc = (acc << 1) | unsigned(g.adjacent(order[i], order[j]));
            if (++nacc == 4) {
                bits.push_back(hexdig[acc]);
                acc = 0;
                nacc = 0;
            }
        }
    if (nacc) bits.push_back(hexdig[acc << (4 - nacc)]);
    return "v" + std::to_string(V) + ":" + bits;
}

struct Search {
    const CompatibilityGraph& g;
    std::string best;
    std::vector<int> best_order;
    bool have_best = false;

    void leaf(const std::vector<int>& color) {
        const std::size_t V = g.size();
        std::vector<int> order(V);
        for (std::size_t v = 0; v < V; ++v) order[std::size_t(color[v])] = int(v);
        std::string cert = encode_in_order(g, order);
        if (!have_best || cert < best) {
            best = std::move(cert);
            best_order = std::move(order);
            have_best = true;
        }
    }

    void run(std::vector<int> color) {
        refine_colors(g, color);
        const std::size_t V = g.size();
        // cells by color
        std::vector<std::vector<int>> cells(V);
        int ncolors = 0;
        for (std::size_t v = 0; v < V; ++v) {
            cells[std::size_t(color[v])].push_back(int(v));
            ncolors = std::max(ncolors, color[v] + 1);
        }
        int target = -1;
        for (int c = 0; c < ncolors; ++c)
            if (cells[std::size_t(c)].size() > 1 &&
                (target < 0 || cells[std::size_t(c)].size() < cells[std::size_t(target)].size()))
                target = c;
        if (target < 0) {
            leaf(color);
            return;
        }
        for (int v : cells[std::size_t(target)]) {
            // individualize v ahead of its cell
            std::vector<int> c2(V);
            for (std::size_t u = 0; u < V; ++u) c2[u] = 2 * color[u] + 1;
            c2[std::size_t(v)] -= 1;
            run(std::move(c2));
        }
    }
};

} // namespace

CanonicalResult canonical_labeling(const CompatibilityGraph& g) {
    Search s{g, {}, {}};
    if (g.size() == 0) return {"v0:", {}};
    s.run(std::vector<int>(g.size(), 0));
    return {s.best, s.best_order};
}

std::string canonical_form(const CompatibilityGraph& g) {
    return canonical_labeling(g).certificate;
}

std::optional<std::vector<int>> isomorphism(const CompatibilityGraph& g1,
                                            const CompatibilityGraph& g2) {
    if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return std::nullopt;
    auto c1 = canonical_labeling(g1);
    auto c2 = canonical_labeling(g2);
    if (c1.certificate != c2.certificate) return std::nullopt;
    const std::size_t V = g1.size();
    std::vector<int> map(V, -1);
    for (std::size_t pos = 0; pos < V; ++pos) map[std::size_t(c1.order[pos])] = c2.order[pos];
    for (std::size_t i = 0; i < V; ++i)
        for (std::size_t j = i + 1; j < V; ++j)
            if (g1.adjacent(int(i), int(j)) != g2.adjacent(map[i], map[j]))
                return std::nullopt; // certificates collided; should not happen
    return map;
}

} // namespace flagpoly
