#pragma once

#include <optional>
#include <vector>

#include "lforce/graph.hpp"
#include "lforce/vertex_set.hpp"

namespace lforce {

// The color-change rule: a colored vertex with exactly one uncolored
// neighbor colors that neighbor. Leaked vertices never force (they still
// receive color). `closure` applies every available force simultaneously,
// round by round, until no force remains; the result is independent of
// ordering, monotone in the initial set, and antitone in the leak set.
VertexSet closure(const Graph& g, const VertexSet& initial, const VertexSet& leaks);

struct Verdict {
    bool passed = false;
    // Lexicographically first leak placement the candidate fails against.
    std::optional<VertexSet> witness_leaks;
    // Vertices left uncolored under that placement.
    std::optional<VertexSet> residual;
};

// Does `candidate` color the whole graph no matter where `ell` leaks land?
// Only leak sets of size exactly min(ell, n) are tested: removing a leak
// never shrinks the closure, so adversarial placements use the full budget.
// Leak sets are tried in lexicographic order and the scan stops at the first
// failure, which `threads > 1` splits across workers without changing the
// reported witness.
Verdict verify_l_forcing(const Graph& g, const VertexSet& candidate, int ell, int threads = 1);

// The first `max_count` failing leak sets in lexicographic order (sequential;
// used to harvest several constraints per round).
std::vector<VertexSet> failing_leak_sets(const Graph& g,
                                         const VertexSet& candidate,
                                         int ell,
                                         int max_count);

} // namespace lforce
