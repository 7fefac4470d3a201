#include <set>

#include "catch2/catch_amalgamated.hpp"
#include "chordless/brute_force.hpp"
#include "chordless/generators.hpp"
#include "chordless/path.hpp"

using namespace chordless;

TEST_CASE("fixed fixtures have the advertised shape") {
    Graph left = gen_heptagon_chords();
    REQUIRE(left.vertex_count() == 7);
    REQUIRE(left.edge_count() == 10);
    Graph right = gen_hexagon_chord();
    REQUIRE(right.vertex_count() == 6);
    REQUIRE(right.edge_count() == 7);
    REQUIRE(right.has_edge(2, 3));
}

TEST_CASE("cycle and complete families") {
    Graph c7 = gen_cycle(7);
    REQUIRE(c7.vertex_count() == 7);
    REQUIRE(c7.edge_count() == 7);
    REQUIRE(c7.has_edge(6, 0));
    REQUIRE_THROWS_AS(gen_cycle(2), std::invalid_argument);

    Graph k6 = gen_complete(6);
    REQUIRE(k6.edge_count() == 15);
    for (VertexId v = 0; v < 6; ++v) REQUIRE(k6.degree(v) == 5);
}

TEST_CASE("bipartite-path family matches its closed-form size") {
    for (std::size_t r : {2u, 3u, 5u, 8u, 13u}) {
        Graph g = gen_bipartite_path(r);
        REQUIRE(g.vertex_count() == 3 * r - 1);
        REQUIRE(g.edge_count() == r * r + 2 * (r - 1));
        const Path chain = bipartite_path_chain(r);
        REQUIRE(is_valid_path(g, chain));
        REQUIRE(is_chordless(g, chain));
        const auto [s, t] = bipartite_path_terminals(r);
        REQUIRE(chain.front() == s);
        REQUIRE(chain.back() == t);
    }
    REQUIRE_THROWS_AS(gen_bipartite_path(1), std::invalid_argument);
}

TEST_CASE("bipartite-path family has exactly r+1 solutions at small r") {
    for (std::size_t r : {2u, 3u, 4u}) {
        Graph g = gen_bipartite_path(r);
        const auto [s, t] = bipartite_path_terminals(r);
        REQUIRE(brute_chordless_st_paths(g, s, t).size() == r + 1);
    }
}

TEST_CASE("gnm sampling is exact and seed-stable") {
    Graph a = gen_gnm(10, 20, 42);
    Graph b = gen_gnm(10, 20, 42);
    REQUIRE(a == b);
    REQUIRE(a.vertex_count() == 10);
    REQUIRE(a.edge_count() == 20);
    Graph c = gen_gnm(10, 20, 43);
    REQUIRE(!(a == c));  // would collide only with astronomic luck
    REQUIRE_THROWS_AS(gen_gnm(4, 7, 1), std::invalid_argument);
    REQUIRE(gen_gnm(5, 10, 9).edge_count() == 10);  // the full K5 by rejection
}

TEST_CASE("stable rng rejects out-of-range draws") {
    StableRng rng(1);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 1000; ++i) {
        std::uint64_t x = rng.below(6);
        REQUIRE(x < 6);
        seen.insert(x);
    }
    REQUIRE(seen.size() == 6);
    StableRng again(1);
    REQUIRE(again.below(1000000) == StableRng(1).below(1000000));
}
