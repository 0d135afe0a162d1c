#include "lforce/forts.hpp"

#include <stdexcept>

#include "lforce/errors.hpp"
#include "lforce/forcing.hpp"

namespace lforce {

namespace {

VertexSet residue_of_complement(const Graph& g, const VertexSet& t, const VertexSet& leaks) {
    return closure(g, t.complement(), leaks).complement();
}

} // namespace

Fort minimize_fort(const Graph& g, const VertexSet& t0, const VertexSet& leaks) {
    if (t0.universe() != g.vertex_count() || leaks.universe() != g.vertex_count())
        throw ParamError("fort candidate universe does not match the graph");
    VertexSet t = t0;
    VertexSet res = residue_of_complement(g, t, leaks);
    if (res.empty() || !res.is_subset_of(t))
        throw std::logic_error("minimize_fort: input is not achievable as a closure residue");
    // Dropping a vertex of t enlarges the complement; if something still
    // escapes the closure, that smaller residue is itself achievable and we
    // restart the scan from it. On exit no single vertex can be dropped, and
    // t equals the residue of its own complement.
restart:
    for (int v : t) {
        VertexSet shrunk = t;
        shrunk.erase(v);
        VertexSet left = residue_of_complement(g, shrunk, leaks);
        if (!left.empty()) {
            t = left;
            goto restart;
        }
    }
    return Fort{t, t.complement(), leaks};
}

Fort extract_fort(const Graph& g, const VertexSet& failed_initial, const VertexSet& leaks) {
    VertexSet missed = closure(g, failed_initial, leaks).complement();
    if (missed.empty())
        throw std::logic_error("extract_fort: the initial set colors everything here");
    return minimize_fort(g, missed, leaks);
}

std::vector<Fort> seed_forts(const Graph& g, int ell) {
    if (ell < 0) throw ParamError("leak budget must be non-negative");
    const int n = g.vertex_count();
    std::vector<Fort> out;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > ell) continue;
        VertexSet members(n);
        members.insert(v);
        out.push_back(Fort{members, members.complement(), g.neighbors(v)});
    }
    return out;
}

bool fort_witness_valid(const Graph& g, const Fort& fort) {
    if (fort.members.empty()) return false;
    return closure(g, fort.witness_initial, fort.witness_leaks).complement() == fort.members;
}

} // namespace lforce
