#include <doctest.h>

#include <random>

#include "lforce/errors.hpp"
#include "lforce/graph.hpp"
#include "support/catalog.hpp"

using namespace lforce;

namespace {

// Count grid edges the slow way: one pass over all cell pairs.
int grid_edges_by_enumeration(int n, int m) {
    int count = 0;
    for (int a = 0; a < n * m; ++a)
        for (int b = a + 1; b < n * m; ++b) {
            int ra = a / m, ca = a % m, rb = b / m, cb = b % m;
            if ((ra == rb && std::abs(ca - cb) == 1) || (ca == cb && std::abs(ra - rb) == 1))
                ++count;
        }
    return count;
}

bool same_edges(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

// b's vertex x corresponds to a's vertex map[x].
bool isomorphic_under(const Graph& a, const Graph& b, const std::vector<int>& map) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    for (const auto& [u, v] : b.edges())
        if (!a.has_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]))
            return false;
    return true;
}

} // namespace

TEST_CASE("family shapes: vertex and edge counts, degrees") {
    Graph p7 = build_family(FamilySpec::path(7));
    CHECK(p7.vertex_count() == 7);
    CHECK(p7.edge_count() == 6);
    CHECK(p7.degree(0) == 1);
    CHECK(p7.degree(3) == 2);
    CHECK(p7.label() == "path(7)");

    Graph c5 = build_family(FamilySpec::cycle(5));
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(c5.has_edge(4, 0));

    Graph k4 = build_family(FamilySpec::complete(4));
    CHECK(k4.edge_count() == 6);
    CHECK(k4.max_degree() == 3);

    Graph w4 = build_family(FamilySpec::wheel(4));
    CHECK(w4.vertex_count() == 5);
    CHECK(w4.edge_count() == 8);
    CHECK(w4.degree(4) == 4);  // hub is the last vertex
    CHECK(w4.degree(0) == 3);

    Graph q3 = build_family(FamilySpec::hypercube(3));
    CHECK(q3.vertex_count() == 8);
    CHECK(q3.edge_count() == 12);
    CHECK(q3.has_edge(0b000, 0b100));
    CHECK_FALSE(q3.has_edge(0b000, 0b110));

    Graph star4 = build_family(FamilySpec::star(4));
    CHECK(star4.vertex_count() == 5);
    CHECK(star4.degree(4) == 4);  // hub last
    for (int leaf = 0; leaf < 4; ++leaf) CHECK(star4.degree(leaf) == 1);
}

TEST_CASE("grid layout is row-major and edge count matches enumeration") {
    Graph g = build_family(FamilySpec::grid(3, 5));
    CHECK(g.vertex_count() == 15);
    CHECK(g.edge_count() == 22);
    CHECK(g.edge_count() == grid_edges_by_enumeration(3, 5));
    // cell (2,3) is index 7; its neighbors are (1,3)=2, (3,3)=12, (2,2)=6, (2,4)=8
    CHECK(g.neighbors(7).to_vector() == std::vector<int>{2, 6, 8, 12});
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 6; ++m)
            CHECK(build_family(FamilySpec::grid(n, m)).edge_count() ==
                  grid_edges_by_enumeration(n, m));
}

TEST_CASE("family parameter validation") {
    CHECK_THROWS_AS(build_family(FamilySpec::path(0)), ParamError);
    CHECK_THROWS_AS(build_family(FamilySpec::cycle(2)), ParamError);
    CHECK_THROWS_AS(build_family(FamilySpec::wheel(2)), ParamError);
    CHECK_THROWS_AS(build_family(FamilySpec::hypercube(0)), ParamError);
    CHECK_THROWS_AS(build_family(FamilySpec::grid(0, 3)), ParamError);
    CHECK_THROWS_AS(build_family(FamilySpec::star(0)), ParamError);
}

TEST_CASE("cartesian product: sizes, identities, known shapes") {
    Graph k2 = build_family(FamilySpec::complete(2));
    Graph q2 = cartesian_product(k2, k2);
    CHECK(q2.vertex_count() == 4);
    CHECK(q2.edge_count() == 4);  // the 4-cycle
    for (int v = 0; v < 4; ++v) CHECK(q2.degree(v) == 2);

    Graph p3 = build_family(FamilySpec::path(3));
    Graph p5 = build_family(FamilySpec::path(5));
    Graph prod = cartesian_product(p3, p5);
    CHECK(prod.vertex_count() == 15);
    CHECK(prod.edge_count() == 22);
    CHECK(same_edges(prod, build_family(FamilySpec::grid(3, 5))));

    // K_1 is the identity up to the index map (x, y) -> y
    Graph k1 = build_family(FamilySpec::complete(1));
    CHECK(same_edges(cartesian_product(k1, p5), p5));

    // edge count rule |G|*E(H) + |H|*E(G)
    Graph c4 = build_family(FamilySpec::cycle(4));
    CHECK(cartesian_product(c4, p3).edge_count() == 4 * 2 + 3 * 4);
}

TEST_CASE("product is commutative and associative under the index maps") {
    Graph p3 = build_family(FamilySpec::path(3));
    Graph c4 = build_family(FamilySpec::cycle(4));
    Graph k2 = build_family(FamilySpec::complete(2));

    Graph ab = cartesian_product(p3, c4);
    Graph ba = cartesian_product(c4, p3);
    std::vector<int> swap_map(12);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 3; ++y) swap_map[static_cast<std::size_t>(x * 3 + y)] = y * 4 + x;
    CHECK(isomorphic_under(ab, ba, swap_map));

    // associativity: the flattened indices coincide exactly
    Graph left = cartesian_product(cartesian_product(p3, c4), k2);
    Graph right = cartesian_product(p3, cartesian_product(c4, k2));
    CHECK(same_edges(left, right));
}

TEST_CASE("hypercube equals an iterated product of edges") {
    Graph k2 = build_family(FamilySpec::complete(2));
    Graph iterated = k2;
    for (int d = 2; d <= 4; ++d) {
        iterated = cartesian_product(iterated, k2);
        CHECK(same_edges(iterated, build_family(FamilySpec::hypercube(d))));
    }
}

TEST_CASE("edge list parsing") {
    Graph g = parse_edge_list("# triangle with a tail\n0 1\n1 2\n2 0\n2 3\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.has_edge(2, 3));

    Graph with_header = parse_edge_list("n 6\n0 1\n4 5\n");
    CHECK(with_header.vertex_count() == 6);
    CHECK(with_header.degree(2) == 0);

    Graph dup = parse_edge_list("0 1\n1 0\n0 1\n");
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1\n2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 one\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    // line numbers surface in the message
    try {
        parse_edge_list("0 1\n1 2\n3 3\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("graph6 golden values") {
    CHECK(parse_graph6("@").vertex_count() == 1);
    Graph k2 = parse_graph6("A_");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.has_edge(0, 1));
    Graph e2 = parse_graph6("A?");
    CHECK(e2.edge_count() == 0);
    // 'Bw' is the triangle
    Graph k3 = parse_graph6("Bw");
    CHECK(k3.edge_count() == 3);
    CHECK(to_graph6(build_family(FamilySpec::complete(3))) == "Bw");
    CHECK(to_graph6(build_family(FamilySpec::complete(2))) == "A_");
    CHECK(to_graph6(build_family(FamilySpec::complete(1))) == "@");
    // header and trailing newline are tolerated
    CHECK(parse_graph6(">>graph6<<A_\n").edge_count() == 1);
}

TEST_CASE("graph6 round-trips on random graphs, including the long form") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 30; ++round) {
        int n = 1 + static_cast<int>(rng() % 20);
        Graph g = lforce::testing::random_graph(n, 0.4, rng());
        Graph back = parse_graph6(to_graph6(g));
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
    }
    Graph big = lforce::testing::random_graph(70, 0.1, 99);
    std::string enc = to_graph6(big);
    CHECK(enc[0] == '~');
    Graph back = parse_graph6(enc);
    CHECK(back.edges() == big.edges());
}

TEST_CASE("graph6 malformed inputs") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);      // truncated
    CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);    // trailing data
    CHECK_THROWS_AS(parse_graph6("A\x01"), ParseError);  // byte below the printable range
}

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 3}}, "bad"), ParamError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}, "loop"), ParamError);
    CHECK_THROWS_AS(Graph(0, {}, "empty"), ParamError);
}

TEST_CASE("connectivity probe") {
    CHECK(is_connected(build_family(FamilySpec::path(6))));
    CHECK_FALSE(is_connected(parse_edge_list("n 4\n0 1\n2 3\n")));
    CHECK(is_connected(build_family(FamilySpec::complete(1))));
}

TEST_CASE("random cubic graphs are simple, 3-regular, connected, reproducible") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        Graph g = random_cubic(12, seed);
        CHECK(g.vertex_count() == 12);
        CHECK(g.edge_count() == 18);
        for (int v = 0; v < 12; ++v) CHECK(g.degree(v) == 3);
        CHECK(is_connected(g));
        Graph again = random_cubic(12, seed);
        CHECK(g.edges() == again.edges());
    }
    CHECK_THROWS_AS(random_cubic(5, 1), ParamError);
    CHECK_THROWS_AS(random_cubic(2, 1), ParamError);
}
