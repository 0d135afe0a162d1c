#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lforce/vertex_set.hpp"

namespace lforce {

// Pick the fewest vertices hitting every fort at least `multiplicity` times,
// with some vertices forced in or barred outright.
struct CoverInstance {
    int universe_size = 0;
    std::vector<VertexSet> forts;
    int multiplicity = 1;
    VertexSet fixed_in;
    VertexSet fixed_out;

    explicit CoverInstance(int universe,
                           std::vector<VertexSet> fort_sets = {},
                           int k = 1)
        : universe_size(universe),
          forts(std::move(fort_sets)),
          multiplicity(k),
          fixed_in(universe),
          fixed_out(universe) {}
};

struct CoverSolution {
    VertexSet chosen;
    int objective = 0;
    bool optimal = false;
    std::uint64_t nodes_explored = 0;
};

// Lazy separation oracle. Called on every complete cover the search reaches;
// returns nothing to accept it, or one more constraint set the cover misses.
// A returned cut must be disjoint from the rejected cover (otherwise it
// would not cut it off) and is enforced for the rest of the search.
using CutOracle = std::function<std::optional<VertexSet>(const VertexSet&)>;

// Exact branch-and-bound. Among all optimal solutions, returns the one whose
// ascending member list is lexicographically smallest, so identical
// instances always produce identical sets. Throws InfeasibleError (naming
// the fort) when a fort has fewer eligible vertices than the multiplicity
// demands, ParamError on malformed instances (empty fort, overlapping
// fixed_in/fixed_out, bad multiplicity).
//
// `lower_hint` must be a valid lower bound on the optimal objective (0 is
// always safe); the optimality proof ends as soon as that bound is met.
// Constraint generation passes the previous optimum: the instance only ever
// gains forts, so it stays a lower bound. An overstated hint silently yields
// a non-optimal cover.
//
// `warm`, when given, must be a feasible solution of `inst` (checked); it
// caps the search from above. A warm start whose size already equals the
// proven lower bound reduces the solve to the lexicographic pass alone.
//
// `oracle`, when given, turns the solve into branch and cut: every complete
// cover is offered to the oracle, rejected ones are cut off in place, and
// the result is the lex-least optimal cover the oracle accepts. The caller
// must supply a `warm` solution the oracle accepts — it witnesses that an
// acceptable cover exists at the proven optimal size — and the oracle must
// never return a cut that any earlier-accepted cover misses.
CoverSolution solve_multicover(const CoverInstance& inst, int lower_hint = 0,
                               const VertexSet* warm = nullptr,
                               const CutOracle& oracle = {});

// Feasible but not necessarily optimal: repeatedly take the vertex covering
// the most unmet demand, lowest index on ties. Used as the initial incumbent.
CoverSolution greedy_upper_bound(const CoverInstance& inst);

// multiplicity x (size of a greedily collected pairwise-disjoint subfamily
// of forts): disjoint forts cannot share chosen vertices.
int disjoint_fort_lower_bound(const CoverInstance& inst);

} // namespace lforce
