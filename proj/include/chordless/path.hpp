#pragma once

// Vertex sequences: simple paths and cycles, plus the canonical cycle form
// used to deduplicate rotations and orientations.

#include <algorithm>
#include <set>
#include <vector>

#include "chordless/graph.hpp"

namespace chordless {

using Path = std::vector<VertexId>;

inline bool is_simple_sequence(const Path& p) {
    std::set<VertexId> seen(p.begin(), p.end());
    return seen.size() == p.size();
}

// True when consecutive vertices are joined by alive edges (and, for
// cycles, the closing edge exists too).
inline bool is_valid_path(const Graph& g, const Path& p, bool as_cycle = false) {
    if (p.empty()) return false;
    if (!is_simple_sequence(p)) return false;
    for (VertexId v : p)
        if (!g.alive(v)) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) return false;
    if (as_cycle) {
        if (p.size() < 3) return false;
        if (!g.has_edge(p.back(), p.front())) return false;
    }
    return true;
}

// Rotates the cycle so its smallest vertex comes first, then orients it
// toward the smaller of that vertex's two cycle neighbours. Every rotation
// or reversal of the same cycle maps to the same sequence.
inline Path canonical_cycle(const Path& cycle) {
    contract(cycle.size() >= 3, "canonical_cycle: need at least 3 vertices");
    const std::size_t k = cycle.size();
    std::size_t at = static_cast<std::size_t>(
        std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
    Path out(k);
    VertexId succ = cycle[(at + 1) % k];
    VertexId pred = cycle[(at + k - 1) % k];
    if (succ <= pred) {
        for (std::size_t i = 0; i < k; ++i) out[i] = cycle[(at + i) % k];
    } else {
        for (std::size_t i = 0; i < k; ++i) out[i] = cycle[(at + k - i) % k];
    }
    return out;
}

}  // namespace chordless
