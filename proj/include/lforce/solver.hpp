#pragma once

#include <vector>

#include "lforce/forts.hpp"
#include "lforce/graph.hpp"

namespace lforce {

struct SolveOptions {
    std::vector<int> required;  // vertices every solution must contain
    int multiplicity = 1;       // how often each fort must be hit
    int forts_per_iteration = 1;
    int threads = 1;
};

struct SolveResult {
    int z = 0;
    VertexSet optimal_set;
    std::vector<Fort> fort_pool;
    int iterations = 0;   // covering problems solved
    int multiplicity = 1;
    int leak_budget = 0;  // effective budget after clamping to n
};

// Exact leaky forcing number by alternating covering and verification:
// solve the covering problem over the forts found so far, test the optimal
// cover against every leak placement, and turn each failure into a new
// minimal fort until a cover survives. Fort discovery is complete, so the
// final cover is optimal. Budgets above n behave like n. A repeated fort
// aborts with std::logic_error - the pool growing strictly is what makes
// the loop terminate.
SolveResult compute_l_forcing_number(const Graph& g, int ell, const SolveOptions& opts = {});

// Same loop with every fort hit at least k times. For k >= 2 the result is
// a redundantly forcing set; instances where some fort is too small (for
// example a degree-<=ell vertex whose singleton fort can never be hit
// twice) surface as InfeasibleError.
SolveResult compute_with_redundancy(const Graph& g, int ell, int k = 2, SolveOptions opts = {});

} // namespace lforce
