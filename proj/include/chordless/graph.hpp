#pragma once

// Mutable undirected simple graph over dense vertex ids [0, n).
// Vertices carry alive flags; removal detaches a vertex together with its
// incident edges and returns a record that undoes the operation exactly.
// Records obey stack discipline: restores must happen in reverse removal
// order (restore_vertex_partial is the one sanctioned exception, see below).

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chordless {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

// Contract violations are programming errors; fail fast even in release.
[[noreturn]] inline void contract_failure(const std::string& what) {
    throw std::logic_error("contract violation: " + what);
}

inline void contract(bool ok, const char* what) {
    if (!ok) contract_failure(what);
}

// Everything needed to undo one remove_vertex call.
// incident lists the neighbours that were alive at removal time, increasing.
struct RemovalRecord {
    VertexId vertex = -1;
    std::vector<VertexId> incident;

    bool operator==(const RemovalRecord&) const = default;
};

class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n) : adj_(n), alive_(n, true) {}

    // Number of vertex slots, dead ones included.
    std::size_t vertex_count() const { return adj_.size(); }

    std::size_t alive_vertex_count() const {
        std::size_t k = 0;
        for (char a : alive_) k += static_cast<std::size_t>(a);
        return k;
    }

    // Alive edges only.
    std::size_t edge_count() const { return m_alive_; }

    bool alive(VertexId v) const {
        return v >= 0 && static_cast<std::size_t>(v) < alive_.size() && alive_[v];
    }

    bool has_edge(VertexId u, VertexId v) const {
        if (!alive(u) || !alive(v)) return false;
        return adj_[u].count(v) > 0;
    }

    // Neighbour sets iterate in increasing id order and contain alive
    // vertices only; that keeps every downstream scan deterministic.
    const std::set<VertexId>& neighbors(VertexId v) const {
        contract(alive(v), "neighbors: vertex not alive");
        return adj_[v];
    }

    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    void add_edge(VertexId u, VertexId v) {
        contract(alive(u) && alive(v), "add_edge: endpoint not alive");
        contract(u != v, "add_edge: self-loop");
        contract(adj_[u].count(v) == 0, "add_edge: edge already present");
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++m_alive_;
    }

    void remove_edge(VertexId u, VertexId v) {
        contract(has_edge(u, v), "remove_edge: edge not present");
        adj_[u].erase(v);
        adj_[v].erase(u);
        --m_alive_;
    }

    // Detaches v and every incident edge. The record lists the affected
    // neighbours so the exact edge set can be rebuilt later.
    RemovalRecord remove_vertex(VertexId v) {
        contract(alive(v), "remove_vertex: vertex not alive");
        RemovalRecord rec;
        rec.vertex = v;
        rec.incident.assign(adj_[v].begin(), adj_[v].end());
        for (VertexId w : rec.incident) adj_[w].erase(v);
        m_alive_ -= rec.incident.size();
        adj_[v].clear();
        alive_[v] = false;
        return rec;
    }

    // Inverse of remove_vertex under stack discipline: every neighbour in
    // rec must be alive again by the time this runs.
    void restore_vertex(const RemovalRecord& rec) {
        contract(!alive(rec.vertex), "restore_vertex: vertex already alive");
        alive_[rec.vertex] = true;
        for (VertexId w : rec.incident) {
            contract(alive(w), "restore_vertex: recorded neighbour is dead");
            adj_[rec.vertex].insert(w);
            adj_[w].insert(rec.vertex);
        }
        m_alive_ += rec.incident.size();
    }

    // Out-of-order restore: re-adds only the edges whose other endpoint is
    // currently alive. Used to revive one vertex while its siblings from the
    // same removal batch stay dead; a later remove_vertex(v) undoes it.
    void restore_vertex_partial(const RemovalRecord& rec) {
        contract(!alive(rec.vertex), "restore_vertex_partial: vertex already alive");
        alive_[rec.vertex] = true;
        for (VertexId w : rec.incident) {
            if (!alive_[w]) continue;
            adj_[rec.vertex].insert(w);
            adj_[w].insert(rec.vertex);
            ++m_alive_;
        }
    }

    bool operator==(const Graph& o) const {
        return alive_ == o.alive_ && adj_ == o.adj_ && m_alive_ == o.m_alive_;
    }

    // Full structural audit; O(n + m log n). Cheap enough for tests,
    // too slow to run per mutation.
    void validate() const {
        std::size_t edges_seen = 0;
        for (std::size_t v = 0; v < adj_.size(); ++v) {
            if (!alive_[v]) {
                contract(adj_[v].empty(), "validate: dead vertex keeps edges");
                continue;
            }
            for (VertexId w : adj_[v]) {
                contract(w != static_cast<VertexId>(v), "validate: self-loop");
                contract(alive(w), "validate: edge to dead vertex");
                contract(adj_[w].count(static_cast<VertexId>(v)) > 0,
                         "validate: asymmetric adjacency");
                ++edges_seen;
            }
        }
        contract(edges_seen == 2 * m_alive_, "validate: edge count drifted");
    }

private:
    std::vector<std::set<VertexId>> adj_;
    std::vector<char> alive_;
    std::size_t m_alive_ = 0;
};

struct LoadResult {
    Graph graph;
    std::size_t duplicate_edges = 0;  // inputs repeating an edge (either order)
};

// Builds a graph from an unordered edge list. Vertex count is 1 + max id,
// so ids may be sparse; unreferenced smaller ids become isolated vertices.
// Self-loops are rejected, repeated edges are dropped and counted.
inline LoadResult from_edge_list(const std::vector<Edge>& edges) {
    VertexId max_id = -1;
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0)
            throw std::invalid_argument("edge list: negative vertex id");
        if (u == v)
            throw std::invalid_argument("edge list: self-loop at vertex " +
                                        std::to_string(u));
        max_id = std::max({max_id, u, v});
    }
    LoadResult out;
    out.graph = Graph(static_cast<std::size_t>(max_id + 1));
    for (const auto& [u, v] : edges) {
        if (out.graph.has_edge(u, v)) {
            ++out.duplicate_edges;
            continue;
        }
        out.graph.add_edge(u, v);
    }
    return out;
}

inline std::vector<Edge> edge_list(const Graph& g) {
    std::vector<Edge> out;
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
        if (!g.alive(v)) continue;
        for (VertexId w : g.neighbors(v))
            if (v < w) out.emplace_back(v, w);
    }
    return out;
}

}  // namespace chordless
