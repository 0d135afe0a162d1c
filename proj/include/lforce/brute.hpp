#pragma once

#include <vector>

#include "lforce/graph.hpp"
#include "lforce/vertex_set.hpp"

namespace lforce {

struct BruteResult {
    int z = 0;
    VertexSet optimal_set;
};

struct BruteOptions {
    int max_vertices = 16;  // candidate enumeration is 2^n; refuse beyond this
};

// Ground truth by sheer enumeration: try every candidate set in
// size-then-lexicographic order and return the first that verifies. Shares
// only the closure definition with the solver - no forts, no covering - so
// agreement between the two is meaningful evidence.
BruteResult brute_force_z(const Graph& g, int ell, const BruteOptions& opts = {});

// Every fort with at most max_size members achievable under at most ell
// leaks, found by trying all (set, leak placement) pairs. Ordered by size
// then lexicographically. Refuses graphs beyond 10 vertices.
std::vector<VertexSet> enumerate_forts(const Graph& g, int ell, int max_size);

} // namespace lforce
