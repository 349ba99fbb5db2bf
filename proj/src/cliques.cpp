#include "flagpoly/cliques.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flagpoly {

namespace {

// Counts cliques inside `cand`, all of whose members extend the current
// partial clique of size `depth`. Scratch rows are reused per depth; the
// vector must be pre-sized to the vertex count, because outer frames hold
// references into it and growing it here would invalidate them.
void count_rec(const std::vector<Bitset64>& adj, const Bitset64& cand, std::size_t depth,
               std::vector<std::int64_t>& counts, std::vector<Bitset64>& scratch) {
    if (counts.size() <= depth) counts.resize(depth + 1, 0);
    counts[depth] += 1;
    for (int v = cand.next_set(0); v >= 0; v = cand.next_set(std::size_t(v) + 1)) {
        Bitset64& next = scratch[depth];
        next = cand;
        next.clear_through(std::size_t(v)); // root each clique at its smallest vertex
        next &= adj[std::size_t(v)];
        if (next.none()) {
            if (counts.size() <= depth + 1) counts.resize(depth + 2, 0);
            counts[depth + 1] += 1;
        } else {
            count_rec(adj, next, depth + 1, counts, scratch);
        }
    }
}

} // namespace

std::vector<std::int64_t> clique_counts_serial(const std::vector<Bitset64>& adj) {
    const std::size_t V = adj.size();
    std::vector<std::int64_t> counts{1}; // the empty clique
    std::vector<Bitset64> scratch(V);
    for (std::size_t v = 0; v < V; ++v) {
        std::vector<std::int64_t> sub;
        Bitset64 cand = adj[v];
        cand.clear_through(v);
        count_rec(adj, cand, 0, sub, scratch);
        // sub[k] = cliques of size k within N(v) above v; each extends {v}
        if (counts.size() < sub.size() + 1) counts.resize(sub.size() + 1, 0);
        for (std::size_t k = 0; k < sub.size(); ++k) counts[k + 1] += sub[k];
    }
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    return counts;
}

std::vector<std::int64_t> clique_counts_parallel(const std::vector<Bitset64>& adj) {
#ifndef _OPENMP
    return clique_counts_serial(adj);
#else
    const int V = int(adj.size());
    std::vector<std::vector<std::int64_t>> partial(std::size_t(std::max(1, V)));

#pragma omp parallel
    {
        std::vector<Bitset64> scratch(adj.size());
#pragma omp for schedule(dynamic, 1)
        for (int v = 0; v < V; ++v) {
            Bitset64 cand = adj[std::size_t(v)];
            cand.clear_through(std::size_t(v));
            count_rec(adj, cand, 0, partial[std::size_t(v)], scratch);
        }
    }

    std::vector<std::int64_t> counts{1};
    for (int v = 0; v < V; ++v) {
        const auto& sub = partial[std::size_t(v)];
        if (counts.size() < sub.size() + 1) counts.resize(sub.size() + 1, 0);
        for (std::size_t k = 0; k < sub.size(); ++k) counts[k + 1] += sub[k];
    }
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    return counts;
#endif
}

std::vector<std::int64_t> clique_counts(const std::vector<Bitset64>& adj) {
#ifdef _OPENMP
    // Root-level parallelism only pays off once the branch tree is nontrivial.
    if (adj.size() >= 24 && omp_get_max_threads() > 1)
        return clique_counts_parallel(adj);
#endif
    return clique_counts_serial(adj);
}

namespace {

void per_vertex_rec(const std::vector<Bitset64>& adj, const Bitset64& cand,
                    std::vector<int>& members,
                    std::vector<std::vector<std::int64_t>>& out) {
    for (int v = cand.next_set(0); v >= 0; v = cand.next_set(std::size_t(v) + 1)) {
        members.push_back(v);
        for (int m : members) out[std::size_t(m)][members.size()] += 1;
        Bitset64 next = cand;
        next.clear_through(std::size_t(v));
        next &= adj[std::size_t(v)];
        if (next.any()) per_vertex_rec(adj, next, members, out);
        members.pop_back();
    }
}

} // namespace

std::vector<std::vector<std::int64_t>> clique_counts_per_vertex(const std::vector<Bitset64>& adj) {
    const std::size_t V = adj.size();
    std::vector<std::vector<std::int64_t>> out(V, std::vector<std::int64_t>(V + 1, 0));
    Bitset64 all(V);
    for (std::size_t v = 0; v < V; ++v) all.set(v);
    std::vector<int> members;
    if (V > 0) per_vertex_rec(adj, all, members, out);
    return out;
}

namespace {

void bron_kerbosch(const std::vector<Bitset64>& adj, std::size_t rsize, Bitset64& P, Bitset64& X,
                   std::set<int>& sizes) {
    if (P.none() && X.none()) {
        sizes.insert(int(rsize));
        return;
    }
    // Pivot: vertex of P|X with the most neighbors in P.
    int pivot = -1;
    std::size_t best = 0;
    for (int u = P.next_set(0); u >= 0; u = P.next_set(std::size_t(u) + 1)) {
        std::size_t c = P.count_and(adj[std::size_t(u)]);
        if (pivot < 0 || c > best) { pivot = u; best = c; }
    }
    for (int u = X.next_set(0); u >= 0; u = X.next_set(std::size_t(u) + 1)) {
        std::size_t c = P.count_and(adj[std::size_t(u)]);
        if (pivot < 0 || c > best) { pivot = u; best = c; }
    }
    Bitset64 ext = P;
    ext.and_not(adj[std::size_t(pivot)]);
    for (int v = ext.next_set(0); v >= 0; v = ext.next_set(std::size_t(v) + 1)) {
        Bitset64 P2 = P;
        P2 &= adj[std::size_t(v)];
        Bitset64 X2 = X;
        X2 &= adj[std::size_t(v)];
        bron_kerbosch(adj, rsize + 1, P2, X2, sizes);
        P.reset(std::size_t(v));
        X.set(std::size_t(v));
    }
}

} // namespace

std::vector<int> maximal_clique_sizes(const std::vector<Bitset64>& adj) {
    const std::size_t V = adj.size();
    std::set<int> sizes;
    Bitset64 P(V), X(V);
    for (std::size_t v = 0; v < V; ++v) P.set(v);
    bron_kerbosch(adj, 0, P, X, sizes);
    return std::vector<int>(sizes.begin(), sizes.end());
}

int max_clique_size(const std::vector<Bitset64>& adj) {
    auto sizes = maximal_clique_sizes(adj);
    return sizes.empty() ? 0 : sizes.back();
}

} // namespace flagpoly
