#include "lforce/cover.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lforce/errors.hpp"

namespace lforce {

namespace {

void validate(const CoverInstance& inst) {
    if (inst.universe_size < 0) throw ParamError("universe size must be non-negative");
    if (inst.multiplicity < 1) throw ParamError("multiplicity must be at least 1");
    if (inst.fixed_in.universe() != inst.universe_size ||
        inst.fixed_out.universe() != inst.universe_size)
        throw ParamError("fixed vertex sets must live in the cover universe");
    if (inst.fixed_in.intersects(inst.fixed_out))
        throw ParamError("fixed_in and fixed_out overlap");
    for (std::size_t i = 0; i < inst.forts.size(); ++i) {
        const VertexSet& f = inst.forts[i];
        if (f.universe() != inst.universe_size)
            throw ParamError("fort " + std::to_string(i) + " does not live in the cover universe");
        if (f.empty()) throw ParamError("fort " + std::to_string(i) + " is empty");
        if (f.size() - f.intersection_size(inst.fixed_out) < inst.multiplicity)
            throw InfeasibleError("fort " + std::to_string(i) + " has fewer than " +
                                      std::to_string(inst.multiplicity) + " eligible vertices",
                                  static_cast<int>(i));
    }
}

std::vector<int> initial_needs(const CoverInstance& inst) {
    std::vector<int> need(inst.forts.size());
    for (std::size_t i = 0; i < inst.forts.size(); ++i)
        need[i] = std::max(0, inst.multiplicity - inst.forts[i].intersection_size(inst.fixed_in));
    return need;
}

// A fort whose eligible vertices contain another fort's eligible vertices
// (with no larger demand) is hit whenever the tighter fort is; keeping it
// only slows the search down. Feasible covers are unchanged by the drop.
CoverInstance drop_dominated(const CoverInstance& inst) {
    std::vector<int> need = initial_needs(inst);
    std::vector<VertexSet> avail;
    avail.reserve(inst.forts.size());
    for (const VertexSet& f : inst.forts) avail.push_back(f - inst.fixed_out);

    std::vector<char> dropped(inst.forts.size(), 0);
    for (std::size_t i = 0; i < inst.forts.size(); ++i) {
        if (dropped[i]) continue;
        for (std::size_t j = i + 1; j < inst.forts.size(); ++j) {
            if (dropped[j]) continue;
            if (need[i] >= need[j] && avail[i].is_subset_of(avail[j]))
                dropped[j] = 1;
            else if (need[j] >= need[i] && avail[j].is_subset_of(avail[i]))
                dropped[i] = 1;
            if (dropped[i]) break;
        }
    }

    CoverInstance kept(inst.universe_size, {}, inst.multiplicity);
    kept.fixed_in = inst.fixed_in;
    kept.fixed_out = inst.fixed_out;
    for (std::size_t i = 0; i < inst.forts.size(); ++i)
        if (!dropped[i]) kept.forts.push_back(inst.forts[i]);
    return kept;
}

// Depth-first search over include/exclude decisions, in two phases with
// different branching rules. The size phase only has to prove the optimal
// cardinality, so it branches inside the unmet fort with the fewest eligible
// vertices (classic tightest-first) and stops outright once the incumbent
// meets a proven lower bound. The lex phase branches on the globally
// lowest-index undecided vertex, include side first; with that rule the
// first full cover reached at the optimal size is the lexicographically
// smallest one.
//
// With a cut oracle the same two phases run branch and cut: complete covers
// the oracle rejects gain a constraint on the spot. A rejecting cut is
// disjoint from the cover that provoked it, so along the whole current path
// its remaining demand is the full multiplicity and no pending include undo
// can touch it — registration needs no per-node bookkeeping, and the search
// simply deepens into the new constraint instead of backtracking.
class Search {
public:
    Search(const CoverInstance& inst, const CutOracle* oracle)
        : universe_(inst.universe_size),
          multiplicity_(inst.multiplicity),
          forts_(inst.forts),
          oracle_(oracle),
          chosen_(inst.fixed_in),
          excluded_(inst.fixed_out),
          need_(initial_needs(inst)),
          order_(inst.forts.size()),
          slack_(static_cast<std::size_t>(inst.universe_size), 0),
          slack_epoch_(static_cast<std::size_t>(inst.universe_size), 0),
          chosen_count_(inst.fixed_in.size()) {
        // visit tight forts first: sharpens both bounds and the branch choice
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            return inst.forts[a].size() < inst.forts[b].size();
        });
    }

    // Phase 1: exact optimal size, starting from a greedy incumbent. `floor`
    // must be a valid lower bound on the optimum; the search ends as soon as
    // the incumbent reaches it.
    int minimum_size(int incumbent, int floor) {
        best_ = incumbent;
        floor_ = floor;
        stopped_ = false;
        if (best_ > floor_) explore_size();
        return best_;
    }

    // Phase 2: first (= lex smallest) cover of exactly the optimal size.
    VertexSet lex_smallest(int optimal_size) {
        target_ = optimal_size;
        if (!explore_lex()) throw std::logic_error("no cover at the proven optimal size");
        return chosen_;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    struct Assessment {
        bool feasible = true;
        bool done = true;
        int branch_vertex = -1;
        int lower_bound = 0;
    };

    // Single pass over unmet forts: feasibility, branch vertex, and the
    // better of two demand bounds - pairwise-disjoint availability sets, and
    // a fractional matching in half-units (each free vertex grants total
    // dual weight 1; halves let pairwise-overlapping forts all contribute,
    // where the disjoint bound keeps only one of them).
    Assessment assess(bool lex_rule) {
        Assessment a;
        VertexSet taken_union(universe_);
        VertexSet tight(universe_);
        int tight_size = 0;
        int disjoint = 0, matched_halves = 0;
        ++epoch_;
        for (std::size_t i : order_) {
            if (need_[i] == 0) continue;
            a.done = false;
            VertexSet avail = forts_[i] - chosen_;
            avail -= excluded_;
            if (avail.size() < need_[i]) {
                a.feasible = false;
                return a;
            }
            if (lex_rule) {
                int low = avail.first();
                if (a.branch_vertex < 0 || low < a.branch_vertex) a.branch_vertex = low;
            } else if (tight_size == 0 || avail.size() < tight_size) {
                tight = avail;
                tight_size = avail.size();
            }
            int grant = 2;
            for (int v : avail) {
                int s = slack_epoch_[v] == epoch_ ? slack_[v] : 2;
                if (s < grant) {
                    grant = s;
                    if (grant == 0) break;
                }
            }
            if (grant > 0) {
                matched_halves += need_[i] * grant;
                for (int v : avail) {
                    slack_[v] = (slack_epoch_[v] == epoch_ ? slack_[v] : 2) - grant;
                    slack_epoch_[v] = epoch_;
                }
            }
            if (!avail.intersects(taken_union)) {
                disjoint += need_[i];
                taken_union |= avail;
            }
        }
        a.lower_bound = std::max(disjoint, (matched_halves + 1) / 2);
        if (!lex_rule && !a.done) a.branch_vertex = most_demanded(tight);
        return a;
    }

    // Among the tight fort's eligible vertices, the one hitting the most
    // unmet forts; lowest index on ties.
    int most_demanded(const VertexSet& candidates) const {
        int best_v = -1, best_score = -1;
        for (int v : candidates.to_vector()) {
            int score = 0;
            for (std::size_t i = 0; i < forts_.size(); ++i)
                if (need_[i] > 0 && forts_[i].contains(v)) ++score;
            if (score > best_score) {
                best_score = score;
                best_v = v;
            }
        }
        return best_v;
    }

    void include(int v, std::vector<std::size_t>& touched) {
        chosen_.insert(v);
        ++chosen_count_;
        for (std::size_t i = 0; i < forts_.size(); ++i)
            if (need_[i] > 0 && forts_[i].contains(v)) {
                --need_[i];
                touched.push_back(i);
            }
    }

    void undo_include(int v, const std::vector<std::size_t>& touched) {
        chosen_.erase(v);
        --chosen_count_;
        for (std::size_t i : touched) ++need_[i];
    }

    // Offers the current complete cover to the oracle. False means accepted.
    // A returned cut is enforced from here on: it must reject the cover, so
    // it is disjoint from everything chosen along the current path and its
    // remaining demand here is exactly the multiplicity.
    bool cut_off() {
        std::optional<VertexSet> cut = (*oracle_)(chosen_);
        if (!cut) return false;
        if (cut->universe() != universe_ || cut->empty())
            throw std::logic_error("cut oracle returned a malformed constraint");
        if (cut->intersects(chosen_))
            throw std::logic_error("cut oracle returned a constraint the cover already hits");
        forts_.push_back(std::move(*cut));
        need_.push_back(multiplicity_);
        order_.push_back(forts_.size() - 1);
        return true;
    }

    void explore_size() {
        if (stopped_) return;
        ++nodes_;
        Assessment a = assess(false);
        for (;;) {
            if (!a.feasible) return;
            if (!a.done) break;
            if (!oracle_ || !cut_off()) {
                best_ = std::min(best_, chosen_count_);
                if (best_ <= floor_) stopped_ = true;
                return;
            }
            // rejected: the new constraint reopens this very node
            a = assess(false);
        }
        if (chosen_count_ + a.lower_bound >= best_) return;
        int v = a.branch_vertex;
        std::vector<std::size_t> touched;
        include(v, touched);
        explore_size();
        undo_include(v, touched);
        if (stopped_) return;
        excluded_.insert(v);
        explore_size();
        excluded_.erase(v);
    }

    bool explore_lex() {
        ++nodes_;
        Assessment a = assess(true);
        for (;;) {
            if (!a.feasible) return false;
            if (chosen_count_ + a.lower_bound > target_) return false;
            if (!a.done) break;
            if (chosen_count_ != target_)
                throw std::logic_error("cover below the proven optimal size");
            if (!oracle_ || !cut_off()) return true;
            a = assess(true);
        }
        int v = a.branch_vertex;
        std::vector<std::size_t> touched;
        include(v, touched);
        if (explore_lex()) return true;
        undo_include(v, touched);
        excluded_.insert(v);
        if (explore_lex()) return true;
        excluded_.erase(v);
        return false;
    }

    const int universe_;
    const int multiplicity_;
    std::vector<VertexSet> forts_;
    const CutOracle* oracle_;
    VertexSet chosen_;
    VertexSet excluded_;
    std::vector<int> need_;
    std::vector<std::size_t> order_;
    std::vector<int> slack_;                  // per-vertex dual capacity left (half-units)
    std::vector<std::uint64_t> slack_epoch_;  // lazily reset: valid only at the current epoch
    std::uint64_t epoch_ = 0;
    int chosen_count_;
    int best_ = 0;
    int floor_ = 0;
    int target_ = 0;
    bool stopped_ = false;
    std::uint64_t nodes_ = 0;
};

} // namespace

CoverSolution greedy_upper_bound(const CoverInstance& inst) {
    validate(inst);
    std::vector<int> need = initial_needs(inst);
    VertexSet chosen = inst.fixed_in;
    for (;;) {
        bool unmet = false;
        for (int d : need)
            if (d > 0) unmet = true;
        if (!unmet) break;
        int best_v = -1, best_score = 0;
        for (int v = 0; v < inst.universe_size; ++v) {
            if (chosen.contains(v) || inst.fixed_out.contains(v)) continue;
            int score = 0;
            for (std::size_t i = 0; i < inst.forts.size(); ++i)
                if (need[i] > 0 && inst.forts[i].contains(v)) ++score;
            if (score > best_score) {
                best_score = score;
                best_v = v;
            }
        }
        if (best_v < 0) throw std::logic_error("greedy cover stalled on a validated instance");
        chosen.insert(best_v);
        for (std::size_t i = 0; i < inst.forts.size(); ++i)
            if (need[i] > 0 && inst.forts[i].contains(best_v)) --need[i];
    }
    return CoverSolution{chosen, chosen.size(), false, 0};
}

int disjoint_fort_lower_bound(const CoverInstance& inst) {
    VertexSet taken_union(inst.universe_size);
    int count = 0;
    for (const VertexSet& f : inst.forts) {
        if (f.universe() != inst.universe_size)
            throw ParamError("fort does not live in the cover universe");
        if (f.empty() || f.intersects(taken_union)) continue;
        ++count;
        taken_union |= f;
    }
    return inst.multiplicity * count;
}

CoverSolution solve_multicover(const CoverInstance& inst, int lower_hint, const VertexSet* warm,
                               const CutOracle& oracle) {
    validate(inst);
    int incumbent = inst.universe_size + 1;
    if (warm) {
        if (warm->universe() != inst.universe_size)
            throw ParamError("warm start universe does not match the instance");
        if (!inst.fixed_in.is_subset_of(*warm) || warm->intersection_size(inst.fixed_out) > 0)
            throw ParamError("warm start ignores a fixed vertex");
        for (const VertexSet& fort : inst.forts)
            if (fort.intersection_size(*warm) < inst.multiplicity)
                throw ParamError("warm start misses fort " + fort.to_string());
        incumbent = warm->size();
    }
    if (oracle && !warm) throw ParamError("a cut oracle needs an accepted warm start");
    CoverInstance pruned = drop_dominated(inst);
    CoverSolution greedy = greedy_upper_bound(pruned);
    // without an oracle any cover is acceptable, so the greedy one may serve
    // as the incumbent; with one, only the warm start is known to be accepted
    if (!oracle) incumbent = std::min(incumbent, greedy.objective);
    int floor = std::max({lower_hint, disjoint_fort_lower_bound(pruned), inst.fixed_in.size()});
    Search search(pruned, oracle ? &oracle : nullptr);
    int best = search.minimum_size(incumbent, floor);
    VertexSet chosen = search.lex_smallest(best);
    return CoverSolution{chosen, best, true, search.nodes()};
}

} // namespace lforce
