#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "extcat/digraph.hpp"

using namespace extcat;

namespace {
BipartiteDigraph make(std::size_t n, std::size_t m,
                      std::initializer_list<std::pair<std::size_t, std::size_t>> xy,
                      std::initializer_list<std::pair<std::size_t, std::size_t>> yx) {
    BipartiteDigraph d;
    for (std::size_t i = 0; i < n; ++i) d.X.push_back("x" + std::to_string(i + 1));
    for (std::size_t i = 0; i < m; ++i) d.Y.push_back("y" + std::to_string(i + 1));
    for (auto [a, b] : xy) d.add_edge(Vertex{0, a}, Vertex{1, b});
    for (auto [a, b] : yx) d.add_edge(Vertex{1, a}, Vertex{0, b});
    return d;
}
} // namespace

TEST_CASE("out-neighborhoods") {
    const BipartiteDigraph d = make(2, 1, {{0, 0}, {1, 0}}, {{0, 0}});
    CHECK(out_neighborhood(d, {}).empty());
    CHECK(out_neighborhood(d, {Vertex{0, 0}}) == std::set<Vertex>{Vertex{1, 0}});
    CHECK(out_neighborhood(d, {Vertex{0, 0}, Vertex{0, 1}}) ==
          std::set<Vertex>{Vertex{1, 0}});
}

TEST_CASE("edges within one side are rejected") {
    BipartiteDigraph d = make(2, 2, {}, {});
    CHECK_THROWS(d.add_edge(Vertex{0, 0}, Vertex{0, 1}));
    CHECK_THROWS_AS(d.add_edge(Vertex{0, 5}, Vertex{1, 0}), UnknownVertex);
}

TEST_CASE("single mutual pair satisfies the neighborhood condition") {
    const BipartiteDigraph d = make(1, 1, {{0, 0}}, {{0, 0}});
    CHECK(hall_condition_brute(d).holds);
    CHECK(hall_condition_matching(d).holds);
}

TEST_CASE("two sources sharing one target violate the condition") {
    const BipartiteDigraph d = make(2, 2, {{0, 0}, {1, 0}}, {{0, 0}, {0, 1}});
    const HallResult r = hall_condition(d);
    CHECK_FALSE(r.holds);
    CHECK(r.violating == std::set<Vertex>{Vertex{0, 0}, Vertex{0, 1}});
    // The same witness surfaces as a relabeling failure.
    const RelabelResult rel = ks_relabel(d);
    CHECK_FALSE(rel.success);
    CHECK(rel.violating == r.violating);
}

TEST_CASE("mutual edges pair straight") {
    const BipartiteDigraph d = make(2, 2, {{0, 0}, {1, 1}}, {{0, 0}, {1, 1}});
    const RelabelResult r = ks_relabel(d);
    REQUIRE(r.success);
    CHECK(r.pairing == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}});
}

TEST_CASE("a four-cycle is one strongly connected component") {
    // x1 -> y1 -> x2 -> y2 -> x1
    const BipartiteDigraph d = make(2, 2, {{0, 0}, {1, 1}}, {{0, 1}, {1, 0}});
    const RelabelResult r = ks_relabel(d);
    REQUIRE(r.success);
    REQUIRE(r.pairing.size() == 2);
    // Every vertex is mutually reachable with every other, so any perfect
    // matching is acceptable; both x's must appear.
    std::set<std::size_t> xs, ys;
    for (auto [x, y] : r.pairing) {
        xs.insert(x);
        ys.insert(y);
    }
    CHECK(xs == std::set<std::size_t>{0, 1});
    CHECK(ys == std::set<std::size_t>{0, 1});
}

TEST_CASE("empty digraph relabels to an empty pairing") {
    const BipartiteDigraph d;
    CHECK(hall_condition(d).holds);
    CHECK(ks_relabel(d).success);
    CHECK(ks_relabel(d).pairing.empty());
}

TEST_CASE("brute force and matching mode agree on random digraphs") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = rng() % 4, m = rng() % 4;
        BipartiteDigraph d;
        for (std::size_t i = 0; i < n; ++i) d.X.push_back("x" + std::to_string(i));
        for (std::size_t i = 0; i < m; ++i) d.Y.push_back("y" + std::to_string(i));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < m; ++y) {
                if (rng() % 2) d.edges_xy.emplace(x, y);
                if (rng() % 2) d.edges_yx.emplace(y, x);
            }
        const HallResult b = hall_condition_brute(d);
        const HallResult f = hall_condition_matching(d);
        CHECK(b.holds == f.holds);
        if (!b.holds)
            CHECK(out_neighborhood(d, b.violating).size() < b.violating.size());
    }
}

TEST_CASE("the brute-force mode respects the vertex cap") {
    Caps tight;
    tight.digraph_vertices = 2;
    const BipartiteDigraph d = make(2, 2, {{0, 0}}, {});
    CHECK_THROWS_AS(hall_condition_brute(d, tight), CapExceeded);
}
