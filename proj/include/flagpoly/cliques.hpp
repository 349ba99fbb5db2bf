#pragma once

#include <cstdint>
#include <vector>

#include "flagpoly/bitset64.hpp"

namespace flagpoly {

// Clique-counting kernel. counts[k] = number of cliques on k vertices
// (counts[0] = 1 for the empty clique). Branch-and-count over bitset
// adjacency rows; every clique is visited once, rooted at its smallest
// vertex.
//
// The parallel variant splits the work over root vertices with OpenMP and
// merges per-thread tallies; sums of exact integers make the result
// schedule-independent. The serial variant is the reference the tests and
// the benchmark compare against.
std::vector<std::int64_t> clique_counts_serial(const std::vector<Bitset64>& adj);
std::vector<std::int64_t> clique_counts_parallel(const std::vector<Bitset64>& adj);
std::vector<std::int64_t> clique_counts(const std::vector<Bitset64>& adj);

// out[v][k] = number of cliques of size k containing vertex v. One pass
// over all cliques; the face f-vector of every facet at once.
std::vector<std::vector<std::int64_t>> clique_counts_per_vertex(const std::vector<Bitset64>& adj);

// Distinct sizes of maximal cliques (pivoting Bron-Kerbosch). The empty
// graph reports {0}: its single maximal clique is empty.
std::vector<int> maximal_clique_sizes(const std::vector<Bitset64>& adj);

int max_clique_size(const std::vector<Bitset64>& adj);

} // namespace flagpoly
