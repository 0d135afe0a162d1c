#include <doctest.h>

#include <random>

#include "lforce/errors.hpp"
#include "lforce/forcing.hpp"
#include "support/catalog.hpp"

using namespace lforce;
using lforce::testing::random_graph;

namespace {

// Reference closure that applies one arbitrary available force at a time, in
// an order driven by rng. Confluence says the result never depends on it.
VertexSet closure_one_at_a_time(const Graph& g,
                                const VertexSet& initial,
                                const VertexSet& leaks,
                                std::mt19937_64& rng) {
    VertexSet colored = initial;
    for (;;) {
        std::vector<std::pair<int, int>> moves;
        for (int v : colored) {
            if (leaks.contains(v)) continue;
            int u = g.neighbors(v).single_outside(colored);
            if (u >= 0) moves.emplace_back(v, u);
        }
        if (moves.empty()) return colored;
        colored.insert(moves[rng() % moves.size()].second);
    }
}

VertexSet random_subset(int n, std::mt19937_64& rng, double density) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (std::uniform_real_distribution<double>(0, 1)(rng) < density) s.insert(v);
    return s;
}

} // namespace

TEST_CASE("closure on small hand-checked cases") {
    Graph p3 = build_family(FamilySpec::path(3));
    CHECK(closure(p3, VertexSet::of(3, {0}), VertexSet(3)) == VertexSet::full(3));
    CHECK(closure(p3, VertexSet::of(3, {0}), VertexSet::of(3, {1})).to_vector() ==
          std::vector<int>{0, 1});

    Graph c4 = build_family(FamilySpec::cycle(4));
    CHECK(closure(c4, VertexSet::of(4, {0, 1}), VertexSet(4)) == VertexSet::full(4));
    // a middle vertex with two uncolored neighbors never fires
    CHECK(closure(c4, VertexSet::of(4, {0}), VertexSet(4)).to_vector() == std::vector<int>{0});

    // leaked vertices still receive color, they just cannot force
    Graph p4 = build_family(FamilySpec::path(4));
    VertexSet got = closure(p4, VertexSet::of(4, {0}), VertexSet::of(4, {2}));
    CHECK(got.to_vector() == std::vector<int>{0, 1, 2});
}

TEST_CASE("closure validates universes and budgets") {
    Graph p3 = build_family(FamilySpec::path(3));
    CHECK_THROWS_AS(closure(p3, VertexSet(4), VertexSet(3)), ParamError);
    CHECK_THROWS_AS(closure(p3, VertexSet(3), VertexSet(2)), ParamError);
    CHECK_THROWS_AS(verify_l_forcing(p3, VertexSet(3), -1), ParamError);
}

TEST_CASE("closure is confluent: simultaneous rounds match random single steps") {
    std::mt19937_64 rng(2024);
    for (int instance = 0; instance < 60; ++instance) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = random_graph(n, 0.35, rng());
        VertexSet initial = random_subset(n, rng, 0.4);
        VertexSet leaks = random_subset(n, rng, 0.2);
        VertexSet reference = closure(g, initial, leaks);
        for (int order = 0; order < 20; ++order)
            CHECK(closure_one_at_a_time(g, initial, leaks, rng) == reference);
    }
}

TEST_CASE("closure monotonicity in the initial set, antitonicity in leaks") {
    std::mt19937_64 rng(5);
    for (int instance = 0; instance < 80; ++instance) {
        int n = 2 + static_cast<int>(rng() % 10);
        Graph g = random_graph(n, 0.4, rng());
        VertexSet small = random_subset(n, rng, 0.3);
        VertexSet grown = small | random_subset(n, rng, 0.2);
        VertexSet leaks = random_subset(n, rng, 0.25);
        VertexSet more_leaks = leaks | random_subset(n, rng, 0.2);
        CHECK(closure(g, small, leaks).is_subset_of(closure(g, grown, leaks)));
        CHECK(closure(g, small, more_leaks).is_subset_of(closure(g, small, leaks)));
        // idempotence
        VertexSet once = closure(g, small, leaks);
        CHECK(closure(g, once, leaks) == once);
        // the closure contains what it started from
        CHECK(small.is_subset_of(once));
    }
}

TEST_CASE("verification on hand-checked cases") {
    Graph p5 = build_family(FamilySpec::path(5));
    Verdict good = verify_l_forcing(p5, VertexSet::of(5, {0, 4}), 1);
    CHECK(good.passed);
    CHECK_FALSE(good.witness_leaks.has_value());

    Verdict bad = verify_l_forcing(p5, VertexSet::of(5, {0}), 1);
    CHECK_FALSE(bad.passed);
    REQUIRE(bad.witness_leaks.has_value());
    CHECK(bad.witness_leaks->to_vector() == std::vector<int>{0});
    CHECK(bad.residual->to_vector() == std::vector<int>{1, 2, 3, 4});

    // a cube minus two adjacent corners survives two leaks
    Graph q3 = build_family(FamilySpec::hypercube(3));
    VertexSet candidate = VertexSet::full(8);
    candidate.erase(0);
    candidate.erase(1);
    CHECK(verify_l_forcing(q3, candidate, 2).passed);

    // zero budget reduces to plain forcing
    Graph c4 = build_family(FamilySpec::cycle(4));
    CHECK(verify_l_forcing(c4, VertexSet::of(4, {0, 1}), 0).passed);
    CHECK_FALSE(verify_l_forcing(c4, VertexSet::of(4, {0}), 0).passed);
}

TEST_CASE("witness is the lexicographically first failing leak placement") {
    Graph p6 = build_family(FamilySpec::path(6));
    // {0, 5} fails with two leaks. {0, 1} still passes (the right-to-left
    // sweep runs through), so the first failure is {0, 2}: the sweep stalls
    // at the leaked 2 and nobody else can reach vertex 1.
    Verdict v = verify_l_forcing(p6, VertexSet::of(6, {0, 5}), 2);
    CHECK_FALSE(v.passed);
    CHECK(v.witness_leaks->to_vector() == std::vector<int>{0, 2});
    CHECK(v.residual->to_vector() == std::vector<int>{1});
}

TEST_CASE("budget at or above n means only the full vertex set passes") {
    for (int n : {3, 5}) {
        Graph g = build_family(FamilySpec::cycle(n));
        int budget = g.max_degree();
        CHECK(verify_l_forcing(g, VertexSet::full(n), budget).passed);
        for (int v = 0; v < n; ++v) {
            VertexSet candidate = VertexSet::full(n);
            candidate.erase(v);
            CHECK_FALSE(verify_l_forcing(g, candidate, budget).passed);
        }
    }
}

TEST_CASE("passing candidates keep passing with smaller budgets and larger sets") {
    std::mt19937_64 rng(17);
    for (int instance = 0; instance < 60; ++instance) {
        int n = 2 + static_cast<int>(rng() % 8);
        Graph g = random_graph(n, 0.45, rng());
        VertexSet candidate = random_subset(n, rng, 0.5);
        int ell = static_cast<int>(rng() % 3);
        if (verify_l_forcing(g, candidate, ell + 1).passed)
            CHECK(verify_l_forcing(g, candidate, ell).passed);
        if (verify_l_forcing(g, candidate, ell).passed) {
            VertexSet bigger = candidate | random_subset(n, rng, 0.3);
            CHECK(verify_l_forcing(g, bigger, ell).passed);
        }
    }
}

TEST_CASE("multi-threaded verification returns the identical verdict") {
    Graph g = build_family(FamilySpec::grid(4, 6));
    const int n = g.vertex_count();
    std::mt19937_64 rng(31);
    for (int instance = 0; instance < 12; ++instance) {
        VertexSet candidate = random_subset(n, rng, 0.35);
        for (int ell : {1, 2}) {
            Verdict seq = verify_l_forcing(g, candidate, ell, 1);
            Verdict par = verify_l_forcing(g, candidate, ell, 4);
            CHECK(seq.passed == par.passed);
            CHECK(seq.witness_leaks == par.witness_leaks);
            CHECK(seq.residual == par.residual);
        }
    }
}

TEST_CASE("failing_leak_sets returns failures in lexicographic order") {
    Graph p5 = build_family(FamilySpec::path(5));
    auto fails = failing_leak_sets(p5, VertexSet::of(5, {0}), 1, 3);
    REQUIRE(fails.size() == 3);
    CHECK(fails[0].to_vector() == std::vector<int>{0});
    CHECK(fails[1].lex_less(fails[2]));
    CHECK(fails[0].lex_less(fails[1]));
}
