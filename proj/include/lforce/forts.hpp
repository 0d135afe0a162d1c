#pragma once

#include <vector>

#include "lforce/graph.hpp"
#include "lforce/vertex_set.hpp"

namespace lforce {

// A fort is a vertex set the forcing process can be made to miss exactly:
// some initial set S and leak placement L leave precisely these vertices
// uncolored. Any successful initial set must intersect every fort, which is
// what turns fort discovery into covering constraints. The witness pair is
// kept so validity stays checkable after the fact.
struct Fort {
    VertexSet members;
    VertexSet witness_initial;
    VertexSet witness_leaks;
};

// Shrink t to an inclusion-minimal fort under the fixed leak placement:
// repeatedly drop the lowest vertex whose removal still leaves an uncovered
// remainder, replacing t by that remainder. Deterministic; the result is
// exactly the closure residue of its own complement. Requires that t is
// already achievable as a residue (V \ closure(V \ t, leaks) nonempty and
// inside t), which holds for any closure residue.
Fort minimize_fort(const Graph& g, const VertexSet& t, const VertexSet& leaks);

// Turn a failed verification into a fort: the vertices `failed_initial`
// misses under `leaks` form a residue, minimized before use. The closure
// must actually be incomplete.
Fort extract_fort(const Graph& g, const VertexSet& failed_initial, const VertexSet& leaks);

// Singleton forts available before any search: a vertex of degree <= ell is
// unreachable once all its neighbors leak. Ordered by vertex index.
std::vector<Fort> seed_forts(const Graph& g, int ell);

// Recompute the witness residue and compare with members (diagnostic).
bool fort_witness_valid(const Graph& g, const Fort& fort);

} // namespace lforce
