#include "lforce/brute.hpp"

#include <string>

#include "lforce/combinations.hpp"
#include "lforce/errors.hpp"
#include "lforce/forcing.hpp"

namespace lforce {

BruteResult brute_force_z(const Graph& g, int ell, const BruteOptions& opts) {
    if (ell < 0) throw ParamError("leak budget must be non-negative");
    const int n = g.vertex_count();
    if (n > opts.max_vertices)
        throw ResourceError("brute force capped at " + std::to_string(opts.max_vertices) +
                            " vertices, got " + std::to_string(n));
    for (int size = 0; size <= n; ++size) {
        std::vector<int> comb = first_combination(size);
        do {
            VertexSet candidate = VertexSet::of(n, comb);
            if (verify_l_forcing(g, candidate, ell).passed) return {size, candidate};
        } while (next_combination(comb, n));
    }
    throw std::logic_error("the full vertex set failed to verify");
}

std::vector<VertexSet> enumerate_forts(const Graph& g, int ell, int max_size) {
    if (ell < 0) throw ParamError("leak budget must be non-negative");
    const int n = g.vertex_count();
    if (n > 10) throw ResourceError("fort enumeration capped at 10 vertices");
    if (max_size < 1) throw ParamError("max_size must be positive");
    max_size = std::min(max_size, n);
    const int leak_cap = std::min(ell, n);

    std::vector<VertexSet> out;
    for (int size = 1; size <= max_size; ++size) {
        std::vector<int> comb = first_combination(size);
        do {
            VertexSet t = VertexSet::of(n, comb);
            VertexSet rest = t.complement();
            bool is_fort = false;
            for (int lk = 0; lk <= leak_cap && !is_fort; ++lk) {
                std::vector<int> lcomb = first_combination(lk);
                do {
                    VertexSet leaks = VertexSet::of(n, lcomb);
                    if (closure(g, rest, leaks).complement() == t) {
                        is_fort = true;
                        break;
                    }
                } while (next_combination(lcomb, n));
            }
            if (is_fort) out.push_back(t);
        } while (next_combination(comb, n));
    }
    return out;
}

} // namespace lforce
