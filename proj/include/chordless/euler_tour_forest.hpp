#pragma once

// Euler tour forest: each tree of a forest is kept as the circular Euler
// tour of its edges, stored in a treap ordered by tour position. A tree on
// k vertices occupies one loop node per vertex plus two arc nodes per edge.
//
// Supported in O(log n) expected: link, cut, connectivity (root compare),
// component vertex count, and locating marked nodes inside one component.
// Marks are how the dynamic-connectivity layer finds candidate edges:
// a vertex mark flags "this vertex owns non-tree edges at my level", an
// edge mark flags "tree edge whose level is exactly mine".

#include <algorithm>
#include <cstdint>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chordless/graph.hpp"

namespace chordless {

class EulerTourForest {
    struct Node {
        Node* l = nullptr;
        Node* r = nullptr;
        Node* p = nullptr;
        std::uint64_t prio = 0;
        VertexId a = -1, b = -1;  // arc a->b; loop node when a == b
        int cnt = 1;              // subtree node count
        int loops = 0;            // subtree loop-node count
        bool vmark = false, emark = false;
        bool sub_vmark = false, sub_emark = false;

        bool is_loop() const { return a == b; }
    };

public:
    explicit EulerTourForest(std::size_t n, std::uint64_t seed = 0x9e3779b97f4a7c15ull)
        : rng_(seed ^ (n * 0x100000001b3ull)) {
        loop_.reserve(n);
        for (std::size_t v = 0; v < n; ++v) {
            Node* nd = new_node(static_cast<VertexId>(v), static_cast<VertexId>(v));
            loop_.push_back(nd);
        }
    }

    EulerTourForest(const EulerTourForest&) = delete;
    EulerTourForest& operator=(const EulerTourForest&) = delete;
    EulerTourForest(EulerTourForest&&) noexcept = default;
    EulerTourForest& operator=(EulerTourForest&&) noexcept = default;

    ~EulerTourForest() {
        for (Node* nd : pool_) delete nd;
    }

    bool connected(VertexId u, VertexId v) const {
        return root_of(loop_[u]) == root_of(loop_[v]);
    }

    bool has_edge(VertexId u, VertexId v) const { return arcs_.count(arc_key(u, v)) > 0; }

    std::size_t component_size(VertexId u) const {
        return static_cast<std::size_t>(root_of(loop_[u])->loops);
    }

    // Joins two distinct trees with edge (u, v).
    void link(VertexId u, VertexId v) {
        contract(!connected(u, v), "EulerTourForest::link: already connected");
        Node* tu = reroot(u);
        Node* tv = reroot(v);
        Node* uv = new_node(u, v);
        Node* vu = new_node(v, u);
        arcs_[arc_key(u, v)] = {uv, vu};
        merge(merge(merge(tu, uv), tv), vu);
    }

    // Removes tree edge (u, v), splitting its tree in two.
    void cut(VertexId u, VertexId v) {
        auto it = arcs_.find(arc_key(u, v));
        contract(it != arcs_.end(), "EulerTourForest::cut: not a tree edge");
        auto [x, y] = it->second;
        arcs_.erase(it);
        int i = index_of(x);
        int j = index_of(y);
        if (i > j) {
            std::swap(x, y);
            std::swap(i, j);
        }
        Node* seq = root_of(x);
        auto [head, rest1] = split(seq, i);
        auto [ax, rest2] = split(rest1, 1);
        auto [mid, rest3] = split(rest2, j - i - 1);
        auto [ay, tail] = split(rest3, 1);
        contract(ax == x && ay == y, "EulerTourForest::cut: tour positions drifted");
        merge(head, tail);
        (void)mid;  // mid is the far-side tree, already a root
        free_node(x);
        free_node(y);
    }

    void set_vertex_mark(VertexId v, bool on) {
        Node* nd = loop_[v];
        if (nd->vmark == on) return;
        nd->vmark = on;
        pull_to_root(nd);
    }

    bool vertex_mark(VertexId v) const { return loop_[v]->vmark; }

    // Marks live on the (u, v) arc with u < v.
    void set_edge_mark(VertexId u, VertexId v, bool on) {
        auto it = arcs_.find(arc_key(u, v));
        contract(it != arcs_.end(), "EulerTourForest::set_edge_mark: not a tree edge");
        Node* nd = (it->second.first->a < it->second.first->b) ? it->second.first
                                                               : it->second.second;
        if (nd->emark == on) return;
        nd->emark = on;
        pull_to_root(nd);
    }

    // Any marked vertex in u's component, or -1.
    VertexId find_marked_vertex(VertexId u) const {
        Node* nd = root_of(loop_[u]);
        if (!nd->sub_vmark) return -1;
        while (nd) {
            if (nd->l && nd->l->sub_vmark) {
                nd = nd->l;
            } else if (nd->is_loop() && nd->vmark) {
                return nd->a;
            } else {
                nd = nd->r;
            }
        }
        contract_failure("EulerTourForest::find_marked_vertex: aggregate lied");
    }

    // Any marked tree edge in u's component, or (-1, -1).
    Edge find_marked_edge(VertexId u) const {
        Node* nd = root_of(loop_[u]);
        if (!nd->sub_emark) return {-1, -1};
        while (nd) {
            if (nd->l && nd->l->sub_emark) {
                nd = nd->l;
            } else if (!nd->is_loop() && nd->emark) {
                return {nd->a, nd->b};
            } else {
                nd = nd->r;
            }
        }
        contract_failure("EulerTourForest::find_marked_edge: aggregate lied");
    }

private:
    static std::uint64_t arc_key(VertexId u, VertexId v) {
        auto lo = static_cast<std::uint64_t>(std::min(u, v));
        auto hi = static_cast<std::uint64_t>(std::max(u, v));
        return (hi << 32) | lo;
    }

    static int size(const Node* t) { return t ? t->cnt : 0; }

    static void pull(Node* t) {
        t->cnt = 1 + size(t->l) + size(t->r);
        t->loops = (t->is_loop() ? 1 : 0) + (t->l ? t->l->loops : 0) +
                   (t->r ? t->r->loops : 0);
        t->sub_vmark = t->vmark || (t->l && t->l->sub_vmark) || (t->r && t->r->sub_vmark);
        t->sub_emark = t->emark || (t->l && t->l->sub_emark) || (t->r && t->r->sub_emark);
    }

    static void pull_to_root(Node* t) {
        for (; t; t = t->p) pull(t);
    }

    static Node* root_of(Node* t) {
        while (t->p) t = t->p;
        return t;
    }

    static const Node* root_of(const Node* t) {
        while (t->p) t = t->p;
        return t;
    }

    // Tour position of a node, counted from 0.
    static int index_of(const Node* t) {
        int idx = size(t->l);
        for (const Node* c = t; c->p; c = c->p)
            if (c == c->p->r) idx += size(c->p->l) + 1;
        return idx;
    }

    Node* merge(Node* a, Node* b) {
        if (!a) return b;
        if (!b) return a;
        if (a->prio > b->prio) {
            Node* m = merge(detach_right(a), b);
            a->r = m;
            m->p = a;
            pull(a);
            return a;
        }
        Node* m = merge(a, detach_left(b));
        b->l = m;
        m->p = b;
        pull(b);
        return b;
    }

    // First k nodes left, remainder right; both results are roots.
    std::pair<Node*, Node*> split(Node* t, int k) {
        if (!t) return {nullptr, nullptr};
        if (k <= size(t->l)) {
            auto [a, b] = split(detach_left(t), k);
            t->l = b;
            if (b) b->p = t;
            pull(t);
            return {a, t};
        }
        auto [a, b] = split(detach_right(t), k - size(t->l) - 1);
        t->r = a;
        if (a) a->p = t;
        pull(t);
        return {t, b};
    }

    static Node* detach_left(Node* t) {
        Node* c = t->l;
        if (c) c->p = nullptr;
        t->l = nullptr;
        return c;
    }

    static Node* detach_right(Node* t) {
        Node* c = t->r;
        if (c) c->p = nullptr;
        t->r = nullptr;
        return c;
    }

    // Rotates u's tour so it starts at u's loop node; returns the new root.
    Node* reroot(VertexId u) {
        Node* lu = loop_[u];
        Node* seq = root_of(lu);
        int i = index_of(lu);
        if (i == 0) return seq;
        auto [head, tail] = split(seq, i);
        return merge(tail, head);
    }

    Node* new_node(VertexId a, VertexId b) {
        Node* nd;
        if (free_.empty()) {
            nd = new Node;
            pool_.push_back(nd);
        } else {
            nd = free_.back();
            free_.pop_back();
        }
        nd->l = nd->r = nd->p = nullptr;
        nd->prio = rng_();
        nd->a = a;
        nd->b = b;
        nd->vmark = nd->emark = false;
        pull(nd);
        return nd;
    }

    void free_node(Node* nd) { free_.push_back(nd); }

    std::vector<Node*> loop_;
    std::unordered_map<std::uint64_t, std::pair<Node*, Node*>> arcs_;
    std::vector<Node*> pool_;
    std::vector<Node*> free_;
    std::mt19937_64 rng_;
};

}  // namespace chordless
