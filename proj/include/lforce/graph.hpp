#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lforce/vertex_set.hpp"

namespace lforce {

// Immutable simple undirected graph on vertices 0..n-1 with a human-readable
// label recording where it came from.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<int, int>>& edges, std::string label);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    int degree(int v) const { return adj_.at(static_cast<std::size_t>(v)).size(); }
    int max_degree() const;
    const VertexSet& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    bool has_edge(int u, int v) const { return neighbors(u).contains(v); }
    const std::string& label() const { return label_; }
    VertexSet vertices() const { return VertexSet::full(n_); }

    // All edges as (u, v) with u < v, sorted ascending.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_;
    int edge_count_ = 0;
    std::vector<VertexSet> adj_;
    std::string label_;
};

enum class FamilyKind { path, cycle, complete, wheel, hypercube, grid, star };

// Parameter bundle naming one member of a graph family. `n` is the primary
// size (dimension for hypercubes, leaf count for stars, rows for grids);
// `m` is the grid column count and unused otherwise.
struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    int n = 0;
    int m = 0;

    static FamilySpec path(int n) { return {FamilyKind::path, n, 0}; }
    static FamilySpec cycle(int n) { return {FamilyKind::cycle, n, 0}; }
    static FamilySpec complete(int n) { return {FamilyKind::complete, n, 0}; }
    static FamilySpec wheel(int n) { return {FamilyKind::wheel, n, 0}; }
    static FamilySpec hypercube(int d) { return {FamilyKind::hypercube, d, 0}; }
    static FamilySpec grid(int n, int m) { return {FamilyKind::grid, n, m}; }
    static FamilySpec star(int t) { return {FamilyKind::star, t, 0}; }
};

std::string family_kind_name(FamilyKind kind);

// Canonical labelings:
//   path/cycle    vertices 0..n-1 in traversal order
//   complete      all pairs
//   wheel         outer cycle 0..n-1, hub n (n+1 vertices total)
//   hypercube     vertex i adjacent to j iff i^j is a power of two
//   grid          row-major, cell (r, c) (1-based) at index (r-1)*m + (c-1)
//   star          leaves 0..t-1, hub t
Graph build_family(const FamilySpec& spec);

// Box product: vertex (x, y) at index x*|V(h)| + y; (x,y)~(x',y') iff x=x'
// and y~y', or y=y' and x~x'.
Graph cartesian_product(const Graph& g, const Graph& h);

// Whitespace/newline-separated "u v" pairs, one edge per line. An optional
// first line "n <count>" pins the vertex count (needed for isolated
// vertices); otherwise n = max endpoint + 1. '#' starts a comment. Duplicate
// edges collapse; self-loops are rejected with their line number.
Graph parse_edge_list(std::string_view text, std::string label = "edgelist");

// One graph6-encoded graph, with or without the optional ">>graph6<<"
// header. Handles the short form (n <= 62) and the three-byte long form.
Graph parse_graph6(std::string_view text, std::string label = "graph6");

// Canonical graph6 encoding of g (shortest legal form, no header).
std::string to_graph6(const Graph& g);

bool is_connected(const Graph& g);

// Random connected 3-regular graph on n vertices (n even, n >= 4) via
// repeated stub matching; deterministic in seed.
Graph random_cubic(int n, std::uint64_t seed);

} // namespace lforce
