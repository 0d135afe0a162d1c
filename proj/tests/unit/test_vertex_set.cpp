#include <doctest.h>

#include <random>
#include <set>

#include "lforce/errors.hpp"
#include "lforce/vertex_set.hpp"

using lforce::ParamError;
using lforce::VertexSet;

TEST_CASE("membership, size, and bounds checking") {
    VertexSet s(70);
    CHECK(s.empty());
    s.insert(0);
    s.insert(63);
    s.insert(64);
    s.insert(69);
    CHECK(s.size() == 4);
    CHECK(s.contains(63));
    CHECK(s.contains(64));
    CHECK_FALSE(s.contains(1));
    s.erase(63);
    CHECK_FALSE(s.contains(63));
    CHECK(s.size() == 3);
    CHECK_THROWS_AS(s.insert(70), ParamError);
    CHECK_THROWS_AS(s.contains(-1), ParamError);
}

TEST_CASE("set algebra against std::set on random data") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        int n = 1 + static_cast<int>(rng() % 130);
        VertexSet a(n), b(n);
        std::set<int> ra, rb;
        for (int i = 0; i < n; ++i) {
            if (rng() & 1) {
                a.insert(i);
                ra.insert(i);
            }
            if (rng() & 1) {
                b.insert(i);
                rb.insert(i);
            }
        }
        std::set<int> runion, rinter, rdiff;
        for (int v : ra) {
            runion.insert(v);
            if (rb.count(v)) rinter.insert(v);
            if (!rb.count(v)) rdiff.insert(v);
        }
        for (int v : rb) runion.insert(v);
        CHECK((a | b).to_vector() == std::vector<int>(runion.begin(), runion.end()));
        CHECK((a & b).to_vector() == std::vector<int>(rinter.begin(), rinter.end()));
        CHECK((a - b).to_vector() == std::vector<int>(rdiff.begin(), rdiff.end()));
        CHECK(a.intersects(b) == !rinter.empty());
        CHECK(a.intersection_size(b) == static_cast<int>(rinter.size()));
        CHECK(a.is_subset_of(a | b));
        CHECK((a & b).is_subset_of(a));
        CHECK(a.complement().size() == n - a.size());
        CHECK((a | a.complement()) == VertexSet::full(n));
    }
}

TEST_CASE("iteration ascends and matches to_vector") {
    VertexSet s = VertexSet::of(100, {3, 97, 0, 64, 63});
    std::vector<int> seen;
    for (int v : s) seen.push_back(v);
    CHECK(seen == std::vector<int>{0, 3, 63, 64, 97});
    CHECK(seen == s.to_vector());
}

TEST_CASE("single_outside and first_outside") {
    VertexSet adj = VertexSet::of(10, {2, 5, 7});
    VertexSet colored = VertexSet::of(10, {2, 7});
    CHECK(adj.single_outside(colored) == 5);
    colored.erase(7);
    CHECK(adj.single_outside(colored) == -1);  // two candidates
    CHECK(adj.first_outside(colored) == 5);
    CHECK(adj.single_outside(adj) == -1);  // none
    CHECK(adj.first_outside(adj) == -1);
}

TEST_CASE("universe mismatch is rejected") {
    VertexSet a(5), b(6);
    CHECK_THROWS_AS(a |= b, ParamError);
    CHECK_THROWS_AS(a.is_subset_of(b), ParamError);
    CHECK(a != b);
}

TEST_CASE("lexicographic comparison follows sorted member lists") {
    auto s = [](std::initializer_list<int> vs) { return VertexSet::of(8, vs); };
    CHECK(s({0, 2}).lex_less(s({1})));
    CHECK(s({1}).lex_less(s({1, 3})));
    CHECK_FALSE(s({1, 3}).lex_less(s({1})));
    CHECK_FALSE(s({0, 2}).lex_less(s({0, 2})));
    CHECK(s({}).lex_less(s({0})));
}

TEST_CASE("formatting") {
    CHECK(VertexSet::of(5, {4, 0, 2}).to_string() == "{0,2,4}");
    CHECK(VertexSet(3).to_string() == "{}");
}
