#pragma once

// Connectivity oracles. Both implementations mirror the alive edge set of
// the graph they were attached to and answer the same four operations:
//
//   connected(u, v)     is there any path between u and v right now
//   extract_path(u, v)  some simple path over current edges, or nothing
//   insert_edge(u, v) / delete_edge(u, v)
//
// Callers must not assume anything about which path extract_path returns
// beyond validity. Operation counters accumulate until reset_counters().
//
// BfsConnectivity is the plain reference: O(1) updates, O(n + m) queries.
// HdtConnectivity keeps a spanning forest in Euler tour trees with the
// level-based replacement-edge search, so updates cost amortized
// O(log^2 n), queries O(log n), and path extraction walks forest edges
// only (O(n)).

#include <concepts>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "chordless/euler_tour_forest.hpp"
#include "chordless/graph.hpp"
#include "chordless/path.hpp"

namespace chordless {

struct OracleOpCounters {
    std::uint64_t queries = 0;
    std::uint64_t path_extractions = 0;
    std::uint64_t edge_deletes = 0;
    std::uint64_t edge_inserts = 0;

    bool operator==(const OracleOpCounters&) const = default;
};

template <class O>
concept ConnectivityOracle = requires(O o, const O co, VertexId u, VertexId v) {
    { o.connected(u, v) } -> std::convertible_to<bool>;
    { o.extract_path(u, v) } -> std::same_as<std::optional<Path>>;
    o.insert_edge(u, v);
    o.delete_edge(u, v);
    { co.counters() } -> std::convertible_to<const OracleOpCounters&>;
};

enum class OracleKind { reference, fast };

inline const char* to_string(OracleKind k) {
    return k == OracleKind::reference ? "reference" : "fast";
}

// Reference oracle: adjacency mirror plus breadth-first search per query.
class BfsConnectivity {
public:
    explicit BfsConnectivity(const Graph& g) : adj_(g.vertex_count()) {
        for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v)
            if (g.alive(v)) adj_[v] = g.neighbors(v);
    }

    void insert_edge(VertexId u, VertexId v) {
        check_pair(u, v);
        contract(adj_[u].count(v) == 0, "BfsConnectivity::insert_edge: present");
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++counters_.edge_inserts;
    }

    void delete_edge(VertexId u, VertexId v) {
        check_pair(u, v);
        contract(adj_[u].count(v) == 1, "BfsConnectivity::delete_edge: absent");
        adj_[u].erase(v);
        adj_[v].erase(u);
        ++counters_.edge_deletes;
    }

    bool connected(VertexId u, VertexId v) {
        ++counters_.queries;
        return bfs_parents(u, v).has_value();
    }

    std::optional<Path> extract_path(VertexId u, VertexId v) {
        ++counters_.path_extractions;
        auto parents = bfs_parents(u, v);
        if (!parents) return std::nullopt;
        return rebuild_path(*parents, u, v);
    }

    const OracleOpCounters& counters() const { return counters_; }
    void reset_counters() { counters_ = {}; }

private:
    void check_pair(VertexId u, VertexId v) const {
        contract(u >= 0 && v >= 0 && static_cast<std::size_t>(u) < adj_.size() &&
                     static_cast<std::size_t>(v) < adj_.size() && u != v,
                 "BfsConnectivity: bad vertex pair");
    }

    std::optional<std::vector<VertexId>> bfs_parents(VertexId u, VertexId v) const {
        check_pair_query(u, v);
        if (u == v) return std::vector<VertexId>{};
        std::vector<VertexId> parent(adj_.size(), -1);
        std::queue<VertexId> q;
        parent[u] = u;
        q.push(u);
        while (!q.empty()) {
            VertexId x = q.front();
            q.pop();
            for (VertexId w : adj_[x]) {
                if (parent[w] != -1) continue;
                parent[w] = x;
                if (w == v) return parent;
                q.push(w);
            }
        }
        return std::nullopt;
    }

    void check_pair_query(VertexId u, VertexId v) const {
        contract(u >= 0 && v >= 0 && static_cast<std::size_t>(u) < adj_.size() &&
                     static_cast<std::size_t>(v) < adj_.size(),
                 "BfsConnectivity: vertex out of range");
    }

    static Path rebuild_path(const std::vector<VertexId>& parent, VertexId u, VertexId v) {
        Path p;
        for (VertexId x = v;; x = parent[x]) {
            p.push_back(x);
            if (x == u) break;
        }
        std::reverse(p.begin(), p.end());
        return p;
    }

    std::vector<std::set<VertexId>> adj_;
    OracleOpCounters counters_;
};

// Fully dynamic connectivity, Holm / de Lichtenberg / Thorup style.
// Every edge carries a level in [0, L); forest i contains the spanning
// tree edges of level >= i. Deleting a tree edge searches for a
// replacement from its level downward, pushing scanned edges one level
// up so each edge pays for O(log n) scans overall.
class HdtConnectivity {
    struct EdgeInfo {
        int level = 0;
        bool tree = false;
    };

public:
    explicit HdtConnectivity(const Graph& g)
        : n_(g.vertex_count()), levels_(level_cap(g.vertex_count())) {
        forests_.reserve(levels_);
        for (std::size_t i = 0; i < levels_; ++i)
            forests_.emplace_back(n_, 0x9e3779b97f4a7c15ull + i);
        nontree_.assign(levels_, std::vector<std::set<VertexId>>(n_));
        tree_adj_.assign(n_, std::set<VertexId>{});
        for (const auto& [u, v] : edge_list(g)) insert_edge(u, v);
        counters_ = {};
    }

    void insert_edge(VertexId u, VertexId v) {
        check_pair(u, v);
        const std::uint64_t k = key(u, v);
        contract(edges_.count(k) == 0, "HdtConnectivity::insert_edge: present");
        ++counters_.edge_inserts;
        if (!forests_[0].connected(u, v)) {
            edges_[k] = {0, true};
            forests_[0].link(u, v);
            forests_[0].set_edge_mark(u, v, true);
            tree_adj_[u].insert(v);
            tree_adj_[v].insert(u);
        } else {
            edges_[k] = {0, false};
            add_nontree(0, u, v);
        }
    }

    void delete_edge(VertexId u, VertexId v) {
        check_pair(u, v);
        auto it = edges_.find(key(u, v));
        contract(it != edges_.end(), "HdtConnectivity::delete_edge: absent");
        ++counters_.edge_deletes;
        const EdgeInfo info = it->second;
        edges_.erase(it);
        if (!info.tree) {
            drop_nontree(info.level, u, v);
            return;
        }
        tree_adj_[u].erase(v);
        tree_adj_[v].erase(u);
        for (int i = 0; i <= info.level; ++i) forests_[i].cut(u, v);
        for (int lev = info.level; lev >= 0; --lev)
            if (find_replacement(u, v, lev)) return;
    }

    bool connected(VertexId u, VertexId v) {
        check_query(u, v);
        ++counters_.queries;
        if (u == v) return true;
        return forests_[0].connected(u, v);
    }

    // Walks spanning forest edges only, so paths have at most n-1 edges.
    std::optional<Path> extract_path(VertexId u, VertexId v) {
        check_query(u, v);
        ++counters_.path_extractions;
        if (u == v) return Path{u};
        if (!forests_[0].connected(u, v)) return std::nullopt;
        std::vector<VertexId> parent(n_, -1);
        std::queue<VertexId> q;
        parent[u] = u;
        q.push(u);
        while (!q.empty()) {
            VertexId x = q.front();
            q.pop();
            for (VertexId w : tree_adj_[x]) {
                if (parent[w] != -1) continue;
                parent[w] = x;
                if (w == v) {
                    Path p;
                    for (VertexId y = v;; y = parent[y]) {
                        p.push_back(y);
                        if (y == u) break;
                    }
                    std::reverse(p.begin(), p.end());
                    return p;
                }
                q.push(w);
            }
        }
        contract_failure("HdtConnectivity::extract_path: forest out of sync");
    }

    const OracleOpCounters& counters() const { return counters_; }
    void reset_counters() { counters_ = {}; }

private:
    static std::size_t level_cap(std::size_t n) {
        std::size_t cap = 1;
        while ((1ull << cap) < std::max<std::size_t>(n, 2)) ++cap;
        return cap + 1;
    }

    static std::uint64_t key(VertexId u, VertexId v) {
        auto lo = static_cast<std::uint64_t>(std::min(u, v));
        auto hi = static_cast<std::uint64_t>(std::max(u, v));
        return (hi << 32) | lo;
    }

    void check_pair(VertexId u, VertexId v) const {
        contract(u >= 0 && v >= 0 && static_cast<std::size_t>(u) < n_ &&
                     static_cast<std::size_t>(v) < n_ && u != v,
                 "HdtConnectivity: bad vertex pair");
    }

    void check_query(VertexId u, VertexId v) const {
        contract(u >= 0 && v >= 0 && static_cast<std::size_t>(u) < n_ &&
                     static_cast<std::size_t>(v) < n_,
                 "HdtConnectivity: vertex out of range");
    }

    void add_nontree(int lev, VertexId u, VertexId v) {
        nontree_[lev][u].insert(v);
        nontree_[lev][v].insert(u);
        forests_[lev].set_vertex_mark(u, true);
        forests_[lev].set_vertex_mark(v, true);
    }

    void drop_nontree(int lev, VertexId u, VertexId v) {
        nontree_[lev][u].erase(v);
        nontree_[lev][v].erase(u);
        if (nontree_[lev][u].empty()) forests_[lev].set_vertex_mark(u, false);
        if (nontree_[lev][v].empty()) forests_[lev].set_vertex_mark(v, false);
    }

    // One round of the replacement search after losing tree edge (u, v)
    // at level lev. Promotes the smaller side's material one level up,
    // reconnects if some non-tree edge leaves that side.
    bool find_replacement(VertexId u, VertexId v, int lev) {
        EulerTourForest& f = forests_[lev];
        VertexId side = (f.component_size(u) <= f.component_size(v)) ? u : v;

        // Tree edges whose level is exactly lev move up a level first.
        for (;;) {
            auto [x, y] = f.find_marked_edge(side);
            if (x < 0) break;
            contract(static_cast<std::size_t>(lev + 1) < levels_,
                     "HdtConnectivity: level overflow");
            f.set_edge_mark(x, y, false);
            forests_[lev + 1].link(x, y);
            forests_[lev + 1].set_edge_mark(x, y, true);
            edges_[key(x, y)].level = lev + 1;
        }

        // Scan level-lev non-tree edges touching the smaller side.
        for (;;) {
            VertexId x = f.find_marked_vertex(side);
            if (x < 0) break;
            // Copy: entries migrate while we look at them.
            const std::vector<VertexId> attached(nontree_[lev][x].begin(),
                                                 nontree_[lev][x].end());
            for (VertexId y : attached) {
                if (f.connected(x, y)) {
                    // Both ends inside the shrunken side; pay it upward.
                    contract(static_cast<std::size_t>(lev + 1) < levels_,
                             "HdtConnectivity: level overflow");
                    drop_nontree(lev, x, y);
                    add_nontree(lev + 1, x, y);
                    edges_[key(x, y)].level = lev + 1;
                } else {
                    // Crosses to the far side: this is the replacement.
                    drop_nontree(lev, x, y);
                    edges_[key(x, y)] = {lev, true};
                    for (int i = 0; i <= lev; ++i) forests_[i].link(x, y);
                    forests_[lev].set_edge_mark(x, y, true);
                    tree_adj_[x].insert(y);
                    tree_adj_[y].insert(x);
                    return true;
                }
            }
        }
        return false;
    }

    std::size_t n_;
    std::size_t levels_;
    std::vector<EulerTourForest> forests_;
    std::vector<std::vector<std::set<VertexId>>> nontree_;
    std::vector<std::set<VertexId>> tree_adj_;
    std::unordered_map<std::uint64_t, EdgeInfo> edges_;
    OracleOpCounters counters_;
};

static_assert(ConnectivityOracle<BfsConnectivity>);
static_assert(ConnectivityOracle<HdtConnectivity>);

}  // namespace chordless
