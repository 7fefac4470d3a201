#include <sstream>

#include "catch2/catch_amalgamated.hpp"
#include "chordless/generators.hpp"
#include "chordless/graph.hpp"
#include "chordless/io.hpp"

using namespace chordless;

TEST_CASE("graph basic edge bookkeeping") {
    Graph g(4);
    REQUIRE(g.vertex_count() == 4);
    REQUIRE(g.edge_count() == 0);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    REQUIRE(g.edge_count() == 2);
    REQUIRE(g.has_edge(1, 0));
    REQUIRE(!g.has_edge(0, 2));
    REQUIRE(g.degree(1) == 2);
    g.remove_edge(0, 1);
    REQUIRE(!g.has_edge(0, 1));
    REQUIRE(g.edge_count() == 1);
    REQUIRE_THROWS_AS(g.add_edge(2, 2), std::logic_error);
    REQUIRE_THROWS_AS(g.remove_edge(0, 3), std::logic_error);
    REQUIRE_NOTHROW(g.validate());
}

TEST_CASE("vertex removal records neighbours in increasing order") {
    Graph g(5);
    g.add_edge(2, 0);
    g.add_edge(2, 4);
    g.add_edge(2, 1);
    g.add_edge(0, 1);
    RemovalRecord rec = g.remove_vertex(2);
    REQUIRE(rec.vertex == 2);
    REQUIRE(rec.incident == std::vector<VertexId>{0, 1, 4});
    REQUIRE(!g.alive(2));
    REQUIRE(g.edge_count() == 1);
    REQUIRE(g.degree(0) == 1);

    g.restore_vertex(rec);
    REQUIRE(g.alive(2));
    REQUIRE(g.edge_count() == 4);
    REQUIRE(g.has_edge(2, 4));
    REQUIRE_NOTHROW(g.validate());
}

TEST_CASE("partial restore only reattaches live endpoints") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    RemovalRecord r0 = g.remove_vertex(0);
    RemovalRecord r2 = g.remove_vertex(2);

    g.restore_vertex_partial(r0);
    REQUIRE(g.alive(0));
    REQUIRE(g.has_edge(0, 1));
    REQUIRE(g.has_edge(0, 3));
    REQUIRE(!g.has_edge(0, 2));  // 2 is still down

    // a fresh removal of 0 undoes the partial restore, then both strict
    // restores in reverse order rebuild the original graph
    RemovalRecord again = g.remove_vertex(0);
    REQUIRE(again.incident == std::vector<VertexId>{1, 3});
    g.restore_vertex(r2);
    g.restore_vertex(r0);
    REQUIRE(g.edge_count() == 3);
    REQUIRE_NOTHROW(g.validate());
}

TEST_CASE("strict restore rejects a dead recorded neighbour") {
    Graph g(3);
    g.add_edge(0, 1);
    RemovalRecord r0 = g.remove_vertex(0);
    g.remove_vertex(1);
    REQUIRE_THROWS_AS(g.restore_vertex(r0), std::logic_error);
}

TEST_CASE("equality is structural") {
    Graph a(3), b(3);
    a.add_edge(0, 1);
    b.add_edge(0, 1);
    REQUIRE(a == b);
    b.add_edge(1, 2);
    REQUIRE(!(a == b));
    b.remove_edge(1, 2);
    REQUIRE(a == b);
    RemovalRecord rec = b.remove_vertex(2);
    REQUIRE(!(a == b));  // differing alive sets count
    b.restore_vertex(rec);
    REQUIRE(a == b);
}

TEST_CASE("from_edge_list counts duplicates and sizes by max id") {
    LoadResult res = from_edge_list({{0, 1}, {1, 0}, {0, 1}, {3, 1}});
    REQUIRE(res.graph.vertex_count() == 4);
    REQUIRE(res.graph.edge_count() == 2);
    REQUIRE(res.duplicate_edges == 2);
    REQUIRE_THROWS_AS(from_edge_list({{2, 2}}), std::invalid_argument);
}

TEST_CASE("edge list parser round-trips and flags junk") {
    std::istringstream in(
        "# comment line\n"
        "0 1\n"
        "\n"
        "1 2   # trailing comment\n");
    LoadResult res = read_edge_list(in);
    REQUIRE(res.graph.vertex_count() == 3);
    REQUIRE(res.graph.edge_count() == 2);

    std::ostringstream out;
    write_edge_list(out, res.graph);
    std::istringstream again(out.str());
    REQUIRE(read_edge_list(again).graph == res.graph);

    std::istringstream bad("0 1 2\n");
    try {
        read_edge_list(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(std::string(e.what()).find("line 1") != std::string::npos);
    }
}

TEST_CASE("dimacs parser handles 1-based ids and range errors") {
    std::istringstream in(
        "c tiny instance\n"
        "p edge 3 2\n"
        "e 1 2\n"
        "e 2 3\n");
    LoadResult res = read_dimacs(in);
    REQUIRE(res.graph.vertex_count() == 3);
    REQUIRE(res.graph.has_edge(0, 1));
    REQUIRE(res.graph.has_edge(1, 2));

    std::istringstream bad(
        "p edge 2 1\n"
        "e 1 5\n");
    REQUIRE_THROWS_AS(read_dimacs(bad), ParseError);
}

TEST_CASE("format sniffing picks dimacs or edge list") {
    std::istringstream dim("p edge 2 1\ne 1 2\n");
    REQUIRE(read_graph_auto(dim).graph.has_edge(0, 1));
    std::istringstream plain("4 5\n");
    Graph g = read_graph_auto(plain).graph;
    REQUIRE(g.vertex_count() == 6);
    REQUIRE(g.has_edge(4, 5));
}

TEST_CASE("random removal and restore stack preserves the graph") {
    Graph g = gen_gnm(12, 26, 7);
    const Graph before = g;
    StableRng rng(99);
    std::vector<RemovalRecord> stack;
    for (int round = 0; round < 200; ++round) {
        if (!stack.empty() && rng.below(2) == 0) {
            g.restore_vertex(stack.back());
            stack.pop_back();
        } else {
            VertexId v = static_cast<VertexId>(rng.below(12));
            if (!g.alive(v)) continue;
            if (g.alive_vertex_count() == 1) continue;
            stack.push_back(g.remove_vertex(v));
        }
        REQUIRE_NOTHROW(g.validate());
    }
    while (!stack.empty()) {
        g.restore_vertex(stack.back());
        stack.pop_back();
    }
    REQUIRE(g == before);
}
