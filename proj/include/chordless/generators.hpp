#pragma once

// Graph families used by tests and the benchmark harness.

#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chordless/graph.hpp"
#include "chordless/path.hpp"

namespace chordless {

// Seven-cycle 0 1 2 3 4 6 5 plus the chords (0,3), (0,6), (3,6). Smallest
// fixture with branching on both sides: the chordless 0-4 paths are 0 3 4
// and 0 6 4, and the detour through 1, 2 is spoiled by chords.
inline Graph gen_heptagon_chords() {
    return from_edge_list({{0, 1}, {0, 3}, {0, 5}, {0, 6}, {1, 2},
                           {2, 3}, {3, 4}, {3, 6}, {4, 6}, {5, 6}})
        .graph;
}

// Six-cycle 0 1 3 5 4 2 plus the single chord (2,3). The chordless 0-4
// paths are 0 2 4 and 0 1 3 5 4, while 0 1 3 2 4 is a simple path killed
// by the chord; regression target for prefix/neighbour bookkeeping.
inline Graph gen_hexagon_chord() {
    return from_edge_list({{0, 2}, {2, 3}, {2, 4}, {0, 1}, {1, 3}, {3, 5}, {4, 5}})
        .graph;
}

inline Graph gen_cycle(std::size_t k) {
    if (k < 3) throw std::invalid_argument("gen_cycle: need k >= 3");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < k; ++i)
        edges.emplace_back(static_cast<VertexId>(i),
                           static_cast<VertexId>((i + 1) % k));
    return from_edge_list(edges).graph;
}

inline Graph gen_complete(std::size_t k) {
    if (k < 1) throw std::invalid_argument("gen_complete: need k >= 1");
    if (k == 1) return Graph(1);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return from_edge_list(edges).graph;
}

// Complete bipartite K_{r,r} on x_1..x_r, y_1..y_r, plus a chain
// x_1 p_1 x_2 p_2 ... p_{r-1} x_r threading the x side. Ids are assigned
// x block first (0..r-1), then y block (r..2r-1), then p block (2r..3r-2),
// so n = 3r - 1 and m = r^2 + 2(r - 1). The graph has exactly r + 1
// chordless x_1 -> x_r paths: the chain and one two-hop path per y.
inline Graph gen_bipartite_path(std::size_t r) {
    if (r < 2) throw std::invalid_argument("gen_bipartite_path: need r >= 2");
    const auto x = [&](std::size_t i) { return static_cast<VertexId>(i); };
    const auto y = [&](std::size_t i) { return static_cast<VertexId>(r + i); };
    const auto p = [&](std::size_t i) { return static_cast<VertexId>(2 * r + i); };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) edges.emplace_back(x(i), y(j));
    for (std::size_t i = 0; i + 1 < r; ++i) {
        edges.emplace_back(x(i), p(i));
        edges.emplace_back(p(i), x(i + 1));
    }
    return from_edge_list(edges).graph;
}

// Endpoints of the advertised enumeration, x_1 and x_r.
inline std::pair<VertexId, VertexId> bipartite_path_terminals(std::size_t r) {
    return {0, static_cast<VertexId>(r - 1)};
}

// The chain solution x_1 p_1 x_2 ... p_{r-1} x_r, handy as a seed
// certificate in tests.
inline Path bipartite_path_chain(std::size_t r) {
    Path chain;
    for (std::size_t i = 0; i < r; ++i) {
        chain.push_back(static_cast<VertexId>(i));
        if (i + 1 < r) chain.push_back(static_cast<VertexId>(2 * r + i));
    }
    return chain;
}

// Deterministic 64-bit generator for reproducible instances. mt19937_64 is
// pinned by the standard; the bound reduction below is ours, so the stream
// of draws is identical on every platform.
class StableRng {
public:
    explicit StableRng(std::uint64_t seed) : eng_(seed) {}

    // Uniform draw from [0, bound) by rejection; no distribution objects,
    // their output is not portable.
    std::uint64_t below(std::uint64_t bound) {
        contract(bound > 0, "StableRng::below: empty range");
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::mt19937_64 eng_;
};

// Uniform simple graph with exactly n vertices and m edges, sampled by
// rejection. Same (n, m, seed) always yields the same graph.
inline Graph gen_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
    const std::size_t max_m = n * (n > 0 ? n - 1 : 0) / 2;
    if (m > max_m)
        throw std::invalid_argument("gen_gnm: m exceeds " + std::to_string(max_m));
    StableRng rng(seed);
    std::set<Edge> picked;
    while (picked.size() < m) {
        VertexId u = static_cast<VertexId>(rng.below(n));
        VertexId v = static_cast<VertexId>(rng.below(n));
        if (u == v) continue;
        picked.insert({std::min(u, v), std::max(u, v)});
    }
    Graph g(n);
    for (const auto& [u, v] : picked) g.add_edge(u, v);
    return g;
}

}  // namespace chordless
