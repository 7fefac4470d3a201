#pragma once

// Exhaustive reference implementations. These are the ground truth the
// fast enumerator is tested against, so they stay deliberately naive:
// enumerate every simple path or cycle, then filter. Nothing here shares
// code with the certificate-driven enumerator.

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chordless/graph.hpp"
#include "chordless/path.hpp"

namespace chordless {

// Exhaustive search is factorial; refuse sizes where it stops being a
// practical oracle unless the caller insists.
inline constexpr std::size_t kBruteForceVertexGuard = 14;

namespace detail {

inline void brute_size_guard(const Graph& g, bool allow_large) {
    if (!allow_large && g.alive_vertex_count() > kBruteForceVertexGuard)
        throw std::invalid_argument(
            "brute force oracle refused: graph has " +
            std::to_string(g.alive_vertex_count()) + " vertices (guard " +
            std::to_string(kBruteForceVertexGuard) + "); pass allow_large to override");
}

}  // namespace detail

// A path (or cycle) is chordless when the only edges amongst its vertices
// are the consecutive ones. Precondition: p is a valid simple path/cycle.
inline bool is_chordless(const Graph& g, const Path& p, bool as_cycle = false) {
    contract(is_valid_path(g, p, as_cycle), "is_chordless: not a valid simple path");
    const std::size_t k = p.size();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (as_cycle && i == 0 && j == k - 1);
            if (consecutive) continue;
            if (g.has_edge(p[i], p[j])) return false;
        }
    }
    return true;
}

// All chordless s-t paths, each reported once, sorted lexicographically.
inline std::vector<Path> brute_chordless_st_paths(const Graph& g, VertexId s,
                                                  VertexId t,
                                                  bool allow_large = false) {
    contract(g.alive(s) && g.alive(t), "brute_chordless_st_paths: endpoint not alive");
    contract(s != t, "brute_chordless_st_paths: s == t");
    detail::brute_size_guard(g, allow_large);

    std::vector<Path> found;
    Path cur{s};
    std::vector<char> used(g.vertex_count(), false);
    used[s] = true;
    std::function<void()> dfs = [&]() {
        VertexId u = cur.back();
        if (u == t) {
            if (is_chordless(g, cur)) found.push_back(cur);
            return;
        }
        for (VertexId w : g.neighbors(u)) {
            if (used[w]) continue;
            used[w] = true;
            cur.push_back(w);
            dfs();
            cur.pop_back();
            used[w] = false;
        }
    };
    dfs();
    std::sort(found.begin(), found.end());
    return found;
}

// All chordless cycles (length >= min_len), canonical form, sorted.
// Each cycle is generated once: the walk starts at the cycle's smallest
// vertex and only visits larger ids, and orientation is fixed by requiring
// second vertex < last vertex.
inline std::vector<Path> brute_chordless_cycles(const Graph& g,
                                                std::size_t min_len = 3,
                                                bool allow_large = false) {
    contract(min_len >= 3, "brute_chordless_cycles: min_len must be >= 3");
    detail::brute_size_guard(g, allow_large);

    std::vector<Path> found;
    std::vector<char> used(g.vertex_count(), false);
    Path cur;
    std::function<void(VertexId)> dfs = [&](VertexId root) {
        VertexId u = cur.back();
        for (VertexId w : g.neighbors(u)) {
            if (w == root && cur.size() >= 3 && cur[1] < cur.back()) {
                if (cur.size() >= min_len && is_chordless(g, cur, /*as_cycle=*/true))
                    found.push_back(cur);
            }
            if (w <= root || used[w]) continue;
            used[w] = true;
            cur.push_back(w);
            dfs(root);
            cur.pop_back();
            used[w] = false;
        }
    };
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
        if (!g.alive(v)) continue;
        cur.assign(1, v);
        used[v] = true;
        dfs(v);
        used[v] = false;
    }
    std::sort(found.begin(), found.end());
    return found;
}

// Neighbours v of the prefix head u such that prefix + v still extends to a
// chordless s-t path in g. The prefix must itself be a chordless path ending
// at u. Checked by extending the prefix vertex by vertex, exhaustively.
inline std::vector<VertexId> brute_good_neighbors(const Graph& g, const Path& prefix,
                                                  VertexId t,
                                                  bool allow_large = false) {
    contract(!prefix.empty(), "brute_good_neighbors: empty prefix");
    contract(is_chordless(g, prefix), "brute_good_neighbors: prefix not chordless");
    contract(g.alive(t), "brute_good_neighbors: t not alive");
    contract(prefix.back() != t, "brute_good_neighbors: prefix already reaches t");
    detail::brute_size_guard(g, allow_large);

    std::vector<VertexId> good;
    std::vector<char> used(g.vertex_count(), false);
    for (VertexId v : prefix) used[v] = true;

    Path cur = prefix;
    bool reached = false;
    std::function<void()> dfs = [&]() {
        if (reached) return;
        VertexId u = cur.back();
        if (u == t) {
            reached = is_chordless(g, cur);
            return;
        }
        for (VertexId w : g.neighbors(u)) {
            if (used[w]) continue;
            used[w] = true;
            cur.push_back(w);
            dfs();
            cur.pop_back();
            used[w] = false;
            if (reached) return;
        }
    };

    VertexId u = prefix.back();
    for (VertexId v : g.neighbors(u)) {
        if (used[v]) continue;
        used[v] = true;
        cur.push_back(v);
        reached = false;
        dfs();
        cur.pop_back();
        used[v] = false;
        if (reached) good.push_back(v);
    }
    return good;
}

}  // namespace chordless
