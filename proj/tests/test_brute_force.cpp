#include "catch2/catch_amalgamated.hpp"
#include "chordless/brute_force.hpp"
#include "chordless/generators.hpp"
#include "chordless/path.hpp"

using namespace chordless;

TEST_CASE("chordlessness predicate on hand-picked sequences") {
    Graph g = gen_heptagon_chords();
    REQUIRE(is_chordless(g, {0, 3, 4}));
    REQUIRE(is_chordless(g, {0, 6, 4}));
    // 0..4 along the rim: (0,3) and (0,6)-side chords cut it
    REQUIRE(!is_chordless(g, {0, 1, 2, 3, 4}));
    REQUIRE(is_chordless(g, {0, 1, 2, 3}, /*as_cycle=*/true));
    REQUIRE(!is_chordless(g, {0, 3, 4, 6}, /*as_cycle=*/true));  // chord (3,6)
}

TEST_CASE("fixture path sets are exactly the frozen ones") {
    Graph left = gen_heptagon_chords();
    REQUIRE(brute_chordless_st_paths(left, 0, 4) ==
            std::vector<Path>{{0, 3, 4}, {0, 6, 4}});

    Graph right = gen_hexagon_chord();
    REQUIRE(brute_chordless_st_paths(right, 0, 4) ==
            std::vector<Path>{{0, 1, 3, 5, 4}, {0, 2, 4}});
}

TEST_CASE("fixture cycle sets are exactly the frozen ones") {
    Graph left = gen_heptagon_chords();
    REQUIRE(brute_chordless_cycles(left) ==
            std::vector<Path>{{0, 1, 2, 3}, {0, 3, 6}, {0, 5, 6}, {3, 4, 6}});
    REQUIRE(brute_chordless_cycles(left, 4) == std::vector<Path>{{0, 1, 2, 3}});
}

TEST_CASE("complete graphs have only triangles, cycles only themselves") {
    REQUIRE(brute_chordless_cycles(gen_complete(4)).size() == 4);
    REQUIRE(brute_chordless_cycles(gen_complete(5)).size() == 10);
    REQUIRE(brute_chordless_cycles(gen_cycle(5)) ==
            std::vector<Path>{{0, 1, 2, 3, 4}});
    REQUIRE(brute_chordless_cycles(gen_cycle(6)).size() == 1);
    // between adjacent clique vertices the edge itself is the only
    // chordless path
    Graph k4 = gen_complete(4);
    REQUIRE(brute_chordless_st_paths(k4, 0, 3) == std::vector<Path>{{0, 3}});
}

TEST_CASE("emitted cycles are canonical and chordless") {
    Graph g = gen_gnm(9, 16, 5);
    for (const Path& c : brute_chordless_cycles(g)) {
        REQUIRE(c == canonical_cycle(c));
        REQUIRE(is_valid_path(g, c, /*as_cycle=*/true));
        REQUIRE(is_chordless(g, c, /*as_cycle=*/true));
    }
}

TEST_CASE("good neighbours of a prefix match hand-derived sets") {
    Graph left = gen_heptagon_chords();
    REQUIRE(brute_good_neighbors(left, {0}, 4) == std::vector<VertexId>{3, 6});
    REQUIRE(brute_good_neighbors(left, {0, 3}, 4) == std::vector<VertexId>{4});

    Graph right = gen_hexagon_chord();
    REQUIRE(brute_good_neighbors(right, {0}, 4) == std::vector<VertexId>{1, 2});
    REQUIRE(brute_good_neighbors(right, {0, 1}, 4) == std::vector<VertexId>{3});
    // target adjacent to the head is itself the good neighbour
    REQUIRE(brute_good_neighbors(right, {0, 2}, 4) == std::vector<VertexId>{4});
}

TEST_CASE("size guard trips unless overridden") {
    Graph big = gen_gnm(15, 20, 3);
    REQUIRE_THROWS_AS(brute_chordless_st_paths(big, 0, 1), std::logic_error);
    REQUIRE_THROWS_AS(brute_chordless_cycles(big), std::logic_error);
    REQUIRE_NOTHROW(brute_chordless_st_paths(big, 0, 1, /*allow_large=*/true));
}

TEST_CASE("disconnected terminals yield the empty set") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    REQUIRE(brute_chordless_st_paths(g, 0, 3).empty());
    REQUIRE(brute_good_neighbors(g, {0}, 3).empty());
}
