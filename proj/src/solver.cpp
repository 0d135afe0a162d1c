#include "lforce/solver.hpp"

#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "lforce/cover.hpp"
#include "lforce/errors.hpp"
#include "lforce/forcing.hpp"

namespace lforce {

namespace {

// Cheap attempt to keep the previous round's cover alive after new forts
// arrive: add one vertex that lifts every deficient fort back to the
// multiplicity, then drop one member no fort still needs. New forts never
// touch the previous cover (they are extracted from its uncolored residue),
// so this one-in-one-out swap is the common case. The result is feasible at
// the same size; it makes no optimality claim — the exact solve that gates
// the final answer provides that.
std::optional<VertexSet> one_swap_repair(const std::vector<Fort>& pool,
                                         const VertexSet& prev,
                                         const VertexSet& required,
                                         int k) {
    const int n = prev.universe();
    std::vector<int> hits(pool.size());
    std::vector<std::size_t> deficient;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        hits[i] = pool[i].members.intersection_size(prev);
        if (hits[i] < k) deficient.push_back(i);
    }
    if (deficient.empty()) return prev;
    for (std::size_t i : deficient)
        if (hits[i] < k - 1) return std::nullopt;  // one vertex lifts by at most one

    for (int v = 0; v < n; ++v) {
        if (prev.contains(v)) continue;
        bool lifts_all = true;
        for (std::size_t i : deficient)
            if (!pool[i].members.contains(v)) {
                lifts_all = false;
                break;
            }
        if (!lifts_all) continue;
        // forts left exactly at the multiplicity pin all their members
        VertexSet pinned(n);
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (hits[i] + (pool[i].members.contains(v) ? 1 : 0) == k)
                pinned |= pool[i].members;
        VertexSet droppable = prev - pinned;
        droppable -= required;
        if (!droppable.empty()) {
            VertexSet swapped = prev;
            swapped.insert(v);
            swapped.erase(droppable.first());
            return swapped;
        }
    }
    return std::nullopt;
}

} // namespace

SolveResult compute_l_forcing_number(const Graph& g, int ell, const SolveOptions& opts) {
    if (ell < 0) throw ParamError("leak budget must be non-negative");
    if (opts.multiplicity < 1) throw ParamError("multiplicity must be at least 1");
    if (opts.forts_per_iteration < 1) throw ParamError("forts_per_iteration must be positive");
    if (opts.threads < 1) throw ParamError("thread count must be positive");
    const int n = g.vertex_count();
    const int budget = std::min(ell, n);

    VertexSet required(n);
    for (int v : opts.required) required.insert(v);

    std::vector<Fort> pool;
    std::unordered_set<VertexSet, VertexSetHash> seen;
    // a fort smaller than the multiplicity can never be hit often enough,
    // so infeasibility surfaces the moment such a fort is discovered
    auto append_fort = [&](Fort fort) {
        if (fort.members.size() < opts.multiplicity)
            throw InfeasibleError("fort " + fort.members.to_string() + " has fewer than " +
                                      std::to_string(opts.multiplicity) + " eligible vertices",
                                  static_cast<int>(pool.size()));
        seen.insert(fort.members);
        pool.push_back(std::move(fort));
    };
    for (Fort& f : seed_forts(g, budget)) append_fort(std::move(f));

    auto pool_instance = [&]() {
        CoverInstance inst(n, {}, opts.multiplicity);
        inst.forts.reserve(pool.size());
        for (const Fort& f : pool) inst.forts.push_back(f.members);
        inst.fixed_in = required;
        return inst;
    };

    SolveResult result;
    result.multiplicity = opts.multiplicity;
    result.leak_budget = budget;

    // Cheap covers - a one-swap repair of the previous round's cover, or the
    // greedy cover - drive fort harvesting: each failed verification yields
    // a fort at almost no cost, and no exact solve runs while cheap covers
    // still fail. Once one verifies, the pool is rich enough to pay for the
    // exact solve, warm-started with that verified cover. At multiplicity 1
    // the exact solve runs branch and cut with verification as the cut
    // oracle: covers it rejects in-tree grow the pool like any other failed
    // candidate, and the cover it returns is the lex-least optimum among
    // true forcing sets, so it is the answer. At higher multiplicities a
    // verified cover may hit later-found forts fewer than k times, which
    // breaks the oracle's acceptance contract - so the exact solve stays
    // plain and the loop resumes whenever its optimum fails verification.
    int lower = 0;                        // pool only grows, so optima never shrink
    std::optional<VertexSet> previous;    // cover of the pool one round ago
    bool canonicalize = false;            // a cheap cover verified; solve exactly
    for (;;) {
        VertexSet candidate(n);
        bool exact = false;
        if (canonicalize && opts.multiplicity == 1) {
            CutOracle oracle = [&](const VertexSet& cover) -> std::optional<VertexSet> {
                Verdict v = verify_l_forcing(g, cover, budget, opts.threads);
                if (v.passed) return std::nullopt;
                auto placements = failing_leak_sets(g, cover, budget, 1);
                Fort fort = extract_fort(g, cover, placements.front());
                if (seen.contains(fort.members))
                    throw std::logic_error("duplicate fort " + fort.members.to_string() +
                                           " for a cover that already hits it");
                VertexSet cut = fort.members;
                append_fort(std::move(fort));
                return cut;
            };
            CoverSolution cover = solve_multicover(pool_instance(), lower, &*previous, oracle);
            ++result.iterations;
            result.z = cover.objective;
            result.optimal_set = std::move(cover.chosen);
            result.fort_pool = std::move(pool);
            return result;
        }
        if (canonicalize) {
            CoverSolution cover = solve_multicover(pool_instance(), lower, &*previous);
            candidate = std::move(cover.chosen);
            lower = cover.objective;
            ++result.iterations;
            exact = true;
        } else if (previous) {
            if (auto swapped = one_swap_repair(pool, *previous, required, opts.multiplicity)) {
                candidate = std::move(*swapped);
            } else {
                candidate = greedy_upper_bound(pool_instance()).chosen;
            }
        } else {
            candidate = greedy_upper_bound(pool_instance()).chosen;
        }
        previous = candidate;

        Verdict verdict = verify_l_forcing(g, candidate, budget, opts.threads);
        if (verdict.passed) {
            if (exact) {
                result.z = lower;
                result.optimal_set = std::move(candidate);
                result.fort_pool = std::move(pool);
                return result;
            }
            canonicalize = true;
            continue;
        }
        canonicalize = false;

        // Every failing leak placement yields a fort the cover missed. The
        // first one must be new - the candidate hits all known forts, so
        // seeing it again means fort extraction or covering went wrong.
        // Extra placements harvested in the same round may legitimately
        // reproduce each other and are simply skipped.
        auto failures = failing_leak_sets(g, candidate, budget, opts.forts_per_iteration);
        bool first = true;
        for (const VertexSet& leaks : failures) {
            Fort fort = extract_fort(g, candidate, leaks);
            if (seen.contains(fort.members)) {
                if (first)
                    throw std::logic_error("duplicate fort " + fort.members.to_string() +
                                           " for a cover that already hits it");
                continue;
            }
            append_fort(std::move(fort));
            first = false;
        }
    }
}

SolveResult compute_with_redundancy(const Graph& g, int ell, int k, SolveOptions opts) {
    opts.multiplicity = k;
    return compute_l_forcing_number(g, ell, opts);
}

} // namespace lforce
