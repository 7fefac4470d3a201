#include "catch2/catch_amalgamated.hpp"
#include "chordless/connectivity.hpp"
#include "chordless/euler_tour_forest.hpp"
#include "chordless/generators.hpp"
#include "chordless/verify.hpp"

using namespace chordless;

TEST_CASE("euler tour forest link, cut and component sizes") {
    EulerTourForest f(6, 1);
    for (VertexId v = 0; v < 6; ++v) REQUIRE(f.component_size(v) == 1);
    f.link(0, 1);
    f.link(1, 2);
    f.link(3, 4);
    REQUIRE(f.connected(0, 2));
    REQUIRE(!f.connected(0, 3));
    REQUIRE(f.component_size(2) == 3);
    REQUIRE(f.component_size(4) == 2);
    REQUIRE(f.has_edge(1, 0));
    REQUIRE(!f.has_edge(0, 2));

    f.cut(1, 2);
    REQUIRE(!f.connected(0, 2));
    REQUIRE(f.component_size(0) == 2);
    REQUIRE(f.component_size(2) == 1);

    f.link(2, 3);
    f.link(0, 4);  // joins everything: {0,1} + {2,3,4}
    REQUIRE(f.connected(1, 2));
    REQUIRE(f.component_size(5) == 1);
    REQUIRE(f.component_size(1) == 5);
}

TEST_CASE("euler tour forest marks guide searches") {
    EulerTourForest f(5, 7);
    f.link(0, 1);
    f.link(1, 2);
    f.link(2, 3);
    f.set_vertex_mark(2, true);
    REQUIRE(f.find_marked_vertex(0) == 2);
    f.set_vertex_mark(2, false);
    REQUIRE(f.find_marked_vertex(0) == -1);

    f.set_edge_mark(1, 2, true);
    Edge e = f.find_marked_edge(3);
    REQUIRE(std::min(e.first, e.second) == 1);
    REQUIRE(std::max(e.first, e.second) == 2);
    f.set_edge_mark(1, 2, false);
    REQUIRE(f.find_marked_edge(3) == Edge{-1, -1});
}

TEST_CASE("reference oracle answers and paths on a known graph") {
    Graph g = gen_cycle(6);
    BfsConnectivity o(g);
    REQUIRE(o.connected(0, 3));
    auto p = o.extract_path(0, 3);
    REQUIRE(p.has_value());
    REQUIRE(p->front() == 0);
    REQUIRE(p->back() == 3);
    REQUIRE(is_valid_path(g, *p));

    g.remove_edge(0, 1);
    o.delete_edge(0, 1);
    REQUIRE(o.connected(0, 3));  // the other way around survives
    g.remove_edge(4, 5);
    o.delete_edge(4, 5);
    REQUIRE(!o.connected(0, 3));
    REQUIRE(!o.extract_path(0, 3).has_value());
    REQUIRE(o.extract_path(0, 0).has_value());  // trivial self path

    auto counters = o.counters();
    REQUIRE(counters.queries >= 2);
    REQUIRE(counters.edge_deletes == 2);
}

TEST_CASE("fast oracle survives a scripted delete and reinsert storm") {
    Graph g = gen_cycle(8);
    HdtConnectivity o(g);
    REQUIRE(o.connected(0, 4));
    // breaking the ring once leaves a path; twice splits it
    o.delete_edge(0, 1);
    REQUIRE(o.connected(1, 0));
    o.delete_edge(4, 5);
    REQUIRE(!o.connected(4, 5));
    REQUIRE(o.connected(1, 4));
    REQUIRE(o.connected(5, 0));
    o.insert_edge(0, 1);
    REQUIRE(o.connected(4, 5));
    auto p = o.extract_path(2, 7);
    REQUIRE(p.has_value());
    for (std::size_t i = 0; i + 1 < p->size(); ++i)
        REQUIRE((*p)[i] != (*p)[i + 1]);
}

TEST_CASE("fast oracle handles dense nontree churn") {
    Graph g = gen_complete(9);
    HdtConnectivity o(g);
    BfsConnectivity ref(g);
    // peel edges off vertex 0 until it isolates, checking as we go
    for (VertexId w = 1; w < 9; ++w) {
        o.delete_edge(0, w);
        ref.delete_edge(0, w);
        REQUIRE(o.connected(0, 8) == ref.connected(0, 8));
    }
    REQUIRE(!o.connected(0, 1));
    o.insert_edge(0, 5);
    REQUIRE(o.connected(0, 1));
}

TEST_CASE("randomized fuzz agrees with the reference oracle") {
    VerifyFailure failure;
    REQUIRE(verify_connectivity_fuzz(12, 18, 11, 2000, &failure));
    REQUIRE(verify_connectivity_fuzz(20, 30, 12, 2000, &failure));
    REQUIRE(verify_connectivity_fuzz(6, 3, 13, 1500, &failure));
}

TEST_CASE("oracles can be rebuilt from a reduced graph") {
    Graph g = gen_gnm(10, 18, 21);
    g.remove_vertex(3);
    HdtConnectivity fast(g);
    BfsConnectivity ref(g);
    for (VertexId a = 0; a < 10; ++a) {
        if (!g.alive(a)) continue;
        for (VertexId b = static_cast<VertexId>(a + 1); b < 10; ++b) {
            if (!g.alive(b)) continue;
            REQUIRE(fast.connected(a, b) == ref.connected(a, b));
        }
    }
}
