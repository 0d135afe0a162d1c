#include "lforce/forcing.hpp"

#include <atomic>
#include <thread>

#include "lforce/combinations.hpp"
#include "lforce/errors.hpp"

namespace lforce {

namespace {

void check_universe(const Graph& g, const VertexSet& s, const char* what) {
    if (s.universe() != g.vertex_count())
        throw ParamError(std::string(what) + " universe does not match the graph");
}

} // namespace

VertexSet closure(const Graph& g, const VertexSet& initial, const VertexSet& leaks) {
    check_universe(g, initial, "initial set");
    check_universe(g, leaks, "leak set");
    const int n = g.vertex_count();
    VertexSet colored = initial;
    for (;;) {
        VertexSet forced(n);
        for (int v : colored) {
            if (leaks.contains(v)) continue;
            int u = g.neighbors(v).single_outside(colored);
            if (u >= 0) forced.insert(u);
        }
        if (forced.empty()) return colored;
        colored |= forced;
    }
}

namespace {

// One leak placement; true when the candidate still colors everything.
bool survives(const Graph& g, const VertexSet& candidate, const VertexSet& leaks) {
    return closure(g, candidate, leaks).size() == g.vertex_count();
}

VertexSet set_from_combination(int n, const std::vector<int>& comb) {
    VertexSet s(n);
    for (int v : comb) s.insert(v);
    return s;
}

// Scan all k-subsets in rank order, stopping at the first failure. Workers
// claim fixed-size rank blocks; a block is skipped only when a failure at a
// strictly earlier rank is already known, so the minimum failing rank found
// equals the sequential one.
std::optional<VertexSet> first_failure_parallel(
    const Graph& g, const VertexSet& candidate, int k, std::uint64_t total, int threads) {
    constexpr std::uint64_t kBlock = 512;
    const int n = g.vertex_count();
    std::atomic<std::uint64_t> next_block{0};
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    auto worker = [&] {
        for (;;) {
            std::uint64_t start = next_block.fetch_add(1) * kBlock;
            if (start >= total || start >= best.load()) return;
            std::vector<int> comb = combination_from_rank(n, k, start);
            std::uint64_t end = std::min(start + kBlock, total);
            for (std::uint64_t r = start; r < end; ++r) {
                if (!survives(g, candidate, set_from_combination(n, comb))) {
                    std::uint64_t cur = best.load();
                    while (r < cur && !best.compare_exchange_weak(cur, r)) {}
                    break; // later ranks in this block cannot beat r
                }
                next_combination(comb, n);
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    std::uint64_t r = best.load();
    if (r == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    return set_from_combination(n, combination_from_rank(n, k, r));
}

} // namespace

std::vector<VertexSet> failing_leak_sets(const Graph& g,
                                         const VertexSet& candidate,
                                         int ell,
                                         int max_count) {
    check_universe(g, candidate, "candidate set");
    if (ell < 0) throw ParamError("leak budget must be non-negative");
    if (max_count < 1) throw ParamError("max_count must be positive");
    const int n = g.vertex_count();
    const int k = std::min(ell, n);
    std::vector<VertexSet> out;
    std::vector<int> comb = first_combination(k);
    do {
        VertexSet leaks = set_from_combination(n, comb);
        if (!survives(g, candidate, leaks)) {
            out.push_back(leaks);
            if (static_cast<int>(out.size()) >= max_count) break;
        }
    } while (next_combination(comb, n));
    return out;
}

Verdict verify_l_forcing(const Graph& g, const VertexSet& candidate, int ell, int threads) {
    check_universe(g, candidate, "candidate set");
    if (ell < 0) throw ParamError("leak budget must be non-negative");
    if (threads < 1) throw ParamError("thread count must be positive");
    const int n = g.vertex_count();
    const int k = std::min(ell, n);

    std::optional<VertexSet> witness;
    std::uint64_t total = binomial_saturating(n, k);
    // Parallel scanning needs exact rank arithmetic and enough work to matter.
    if (threads > 1 && total >= 2048 &&
        total < std::numeric_limits<std::uint64_t>::max() / 64) {
        witness = first_failure_parallel(g, candidate, k, total, threads);
    } else {
        auto fails = failing_leak_sets(g, candidate, ell, 1);
        if (!fails.empty()) witness = fails.front();
    }

    if (!witness) return {true, std::nullopt, std::nullopt};
    VertexSet residual = closure(g, candidate, *witness).complement();
    return {false, std::move(*witness), std::move(residual)};
}

} // namespace lforce
