#pragma once

// Chordless st-path and chordless cycle enumeration.
//
// The enumerator walks a recursion tree in which every node holds a
// chordless prefix from s plus a certificate: some current path from the
// prefix head u to t. A certificate proves a chordless completion exists,
// so no branch is ever explored in vain. At each internal node a cleanup
// loop repeatedly picks the neighbour of u closest to t along the
// certificate, records it with the certificate suffix it hangs off,
// removes it from the graph, and asks the connectivity oracle whether u
// still reaches t; when that fails, the recorded vertices are exactly the
// neighbours of u through which a chordless completion survives. The node
// then recurses on each recorded entry with all sibling entries kept
// removed, which is what prevents chords back into abandoned branches.
//
// Distance-to-t labels are stamped along the certificate and versioned by
// an epoch counter so a stale label is never trusted: one integer bump
// invalidates all labels. Suffix certificates reused by chain (single
// child) nodes keep valid labels because distances are measured from t.

#include <cassert>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "chordless/connectivity.hpp"
#include "chordless/graph.hpp"
#include "chordless/path.hpp"

namespace chordless {

// Epoch-versioned distance labels. valid(v) only between a relabel that
// stamped v and the next relabel anywhere.
class DistanceLabels {
public:
    explicit DistanceLabels(std::size_t n) : epoch_(n, 0), dist_(n, 0) {}

    bool valid(VertexId v) const { return epoch_[v] == current_; }

    std::size_t dist_to_t(VertexId v) const {
        contract(valid(v), "DistanceLabels: reading a stale label");
        return dist_[v];
    }

    // Invalidates every outstanding label, then stamps the given path with
    // distances counted from its last vertex.
    template <class View>
    void relabel(const View& path) {
        ++current_;
        const std::size_t k = path.size();
        for (std::size_t i = 0; i < k; ++i) {
            VertexId v = path[i];
            epoch_[v] = current_;
            dist_[v] = k - 1 - i;
        }
    }

private:
    std::vector<std::uint64_t> epoch_;
    std::vector<std::size_t> dist_;
    std::uint64_t current_ = 1;
};

// Immutable shared path with a start offset: suffix views are O(1) and keep
// the underlying path alive for as long as any recursion entry needs it.
class CertView {
public:
    CertView() = default;

    static CertView own(Path p) {
        CertView c;
        c.owner_ = std::make_shared<const Path>(std::move(p));
        return c;
    }

    CertView suffix_from(std::size_t pos) const {
        contract(owner_ && start_ + pos < owner_->size(), "CertView: suffix out of range");
        CertView c;
        c.owner_ = owner_;
        c.start_ = start_ + pos;
        return c;
    }

    std::size_t size() const { return owner_ ? owner_->size() - start_ : 0; }
    VertexId operator[](std::size_t i) const { return (*owner_)[start_ + i]; }
    VertexId front() const { return (*owner_)[start_]; }
    VertexId back() const { return owner_->back(); }

    Path to_path() const { return Path(owner_->begin() + start_, owner_->end()); }

private:
    std::shared_ptr<const Path> owner_;
    std::size_t start_ = 0;
};

// One surviving branch at an internal node: the chosen neighbour, the
// certificate suffix that proves its completion, and the removal record
// that puts it back.
struct GoodEntry {
    VertexId v = -1;
    CertView suffix;
    RemovalRecord removal;
};

// Per (s, t) recursion-tree tallies, kept so cycle enumerations can be
// audited run by run.
struct StRunStats {
    VertexId s = -1;
    VertexId t = -1;
    std::uint64_t solutions = 0;  // recursion leaves of this run
    std::uint64_t branching_nodes = 0;
    std::uint64_t unary_nodes = 0;
    std::uint64_t internal_nodes = 0;
    std::uint64_t children_total = 0;  // sum of child counts over internal nodes
    std::size_t max_depth = 0;
};

struct EnumStats {
    std::uint64_t solutions = 0;  // emissions handed to the sink
    std::uint64_t leaves = 0;     // recursion leaves (= chordless paths found)
    std::uint64_t branching_nodes = 0;
    std::uint64_t unary_nodes = 0;
    std::uint64_t internal_nodes = 0;
    // Sum of child counts over internal nodes. Every child subtree yields at
    // least one leaf, so children_total - internal_nodes + 1 = leaves holds
    // on every run; branching_nodes alone matches leaves - 1 only when all
    // branch points are binary.
    std::uint64_t children_total = 0;
    std::size_t max_depth = 0;

    // Wasted neighbour visits, charged per root-to-leaf path: at each
    // internal node, the alive neighbours of u that cleanup did not keep.
    std::uint64_t nongood_scans_current_path = 0;
    std::uint64_t nongood_scans_max = 0;   // max over emitted leaves
    std::uint64_t nongood_scans_total = 0; // sum over emitted leaves

    OracleOpCounters oracle;
    double wall_ms = 0.0;
    std::vector<double> delay_us;  // gap before each emission, microseconds
    std::vector<StRunStats> st_runs;
};

// Neighbour of u with the smallest valid distance label; scans N(u) only.
// Precondition: at least one neighbour is labelled (u reaches t along the
// current certificate).
inline std::pair<VertexId, std::size_t> closest_good_neighbor(
    const Graph& g, const DistanceLabels& labels, VertexId u) {
    VertexId best = -1;
    std::size_t best_d = std::numeric_limits<std::size_t>::max();
    for (VertexId w : g.neighbors(u)) {
        if (!labels.valid(w)) continue;
        std::size_t d = labels.dist_to_t(w);
        if (d < best_d) {
            best = w;
            best_d = d;
        }
    }
    contract(best >= 0, "closest_good_neighbor: no labelled neighbour");
    return {best, best_d};
}

// Emission timing shared by one user-facing enumeration.
class DelayRecorder {
public:
    DelayRecorder(EnumStats& stats, bool enabled)
        : stats_(stats), enabled_(enabled), last_(std::chrono::steady_clock::now()) {}

    void sample() {
        if (!enabled_) return;
        auto now = std::chrono::steady_clock::now();
        stats_.delay_us.push_back(
            std::chrono::duration<double, std::micro>(now - last_).count());
        last_ = now;
    }

private:
    EnumStats& stats_;
    bool enabled_;
    std::chrono::steady_clock::time_point last_;
};

struct EnumOptions {
    OracleKind oracle = OracleKind::fast;
    // Replaces the first oracle-extracted certificate; must be a valid
    // s-t path in the current graph (not necessarily chordless).
    std::optional<Path> seed_certificate;
    bool record_delays = true;
};

// Walks the recursion tree for one (s, t) pair. Leaves go to the sink as
// chordless s-t paths; emission counting and timing are the caller's job,
// which lets the cycle driver filter before counting.
template <ConnectivityOracle Oracle, class Sink>
class StPathLister {
public:
    StPathLister(Graph& g, Oracle& o, VertexId t, Sink& sink, EnumStats& stats,
                 DistanceLabels& labels)
        : g_(g), o_(o), t_(t), sink_(sink), stats_(stats), labels_(labels) {}

    // Enumerates every chordless s-t path. The certificate must start at s,
    // end at t and be freshly labelled.
    void start(VertexId s, CertView cert) {
        prefix_.assign(1, s);
        run_max_depth_ = 0;
        recurse(s, std::move(cert));
        contract(prefix_.size() == 1, "StPathLister: prefix stack unbalanced");
    }

    std::size_t run_max_depth() const { return run_max_depth_; }

    // The cleanup loop. Detaches every surviving neighbour of u (with its
    // incident edges) from graph and oracle; afterwards u no longer reaches
    // t. Entries come back in discovery order: closest to t first.
    std::vector<GoodEntry> cleanup_good_neighbors(VertexId u, CertView cert) {
        std::vector<GoodEntry> entries;
        for (;;) {
            auto [v, d] = closest_good_neighbor(g_, labels_, u);
            // A valid label always points into the live certificate: stale
            // epochs are filtered out, and same-epoch off-suffix vertices sit
            // farther from t than every on-suffix candidate.
            contract(d < cert.size(), "cleanup: label outside the certificate");
            std::size_t pos = cert.size() - 1 - d;
            contract(cert[pos] == v, "cleanup: label desynchronised");
            CertView suffix = cert.suffix_from(pos);
            RemovalRecord rec = remove_mirrored(v);
            entries.push_back(GoodEntry{v, std::move(suffix), std::move(rec)});
            if (!o_.connected(u, t_)) break;
            auto next = o_.extract_path(u, t_);
            contract(next.has_value(), "cleanup: oracle said connected but gave no path");
            cert = CertView::own(std::move(*next));
            labels_.relabel(cert);
        }
        return entries;
    }

    DistanceLabels& labels() { return labels_; }

private:
    void recurse(VertexId u, CertView cert) {
        const std::size_t depth = prefix_.size() - 1;
        run_max_depth_ = std::max(run_max_depth_, depth);
        stats_.max_depth = std::max(stats_.max_depth, depth);
        if (u == t_) {
            ++stats_.leaves;
            stats_.nongood_scans_total += stats_.nongood_scans_current_path;
            stats_.nongood_scans_max = std::max(stats_.nongood_scans_max,
                                                stats_.nongood_scans_current_path);
            sink_(prefix_);
            return;
        }

        const std::size_t entry_degree = g_.degree(u);
        std::vector<GoodEntry> entries = cleanup_good_neighbors(u, std::move(cert));
        contract(!entries.empty(), "recurse: internal node without children");

        ++stats_.internal_nodes;
        stats_.children_total += entries.size();
        const bool branching = entries.size() >= 2;
        if (branching)
            ++stats_.branching_nodes;
        else
            ++stats_.unary_nodes;

        const std::uint64_t wasted = entry_degree - entries.size();
        stats_.nongood_scans_current_path += wasted;

        for (const GoodEntry& e : entries) {
            g_.restore_vertex_partial(e.removal);
            mirror_partial_restore(e.removal);
            // Chain children inherit the current labelling; siblings need a
            // fresh stamp because the loop above moved the epoch on.
            if (branching) labels_.relabel(e.suffix);
            prefix_.push_back(e.v);
            recurse(e.v, e.suffix);
            prefix_.pop_back();
            // Re-detach; this removes exactly the edges the partial restore
            // added, because the child put the graph back as it found it.
            remove_mirrored(e.v);
        }

        for (std::size_t k = entries.size(); k-- > 0;) {
            g_.restore_vertex(entries[k].removal);
            mirror_full_restore(entries[k].removal);
        }

        stats_.nongood_scans_current_path -= wasted;
    }

    RemovalRecord remove_mirrored(VertexId v) {
        RemovalRecord rec = g_.remove_vertex(v);
        for (VertexId w : rec.incident) o_.delete_edge(v, w);
        return rec;
    }

    void mirror_partial_restore(const RemovalRecord& rec) {
        for (VertexId w : rec.incident)
            if (g_.alive(w)) o_.insert_edge(rec.vertex, w);
    }

    void mirror_full_restore(const RemovalRecord& rec) {
        for (VertexId w : rec.incident) o_.insert_edge(rec.vertex, w);
    }

    Graph& g_;
    Oracle& o_;
    VertexId t_;
    Sink& sink_;
    EnumStats& stats_;
    DistanceLabels& labels_;
    Path prefix_;
    std::size_t run_max_depth_ = 0;
};

namespace detail {

// One gated (s, t) enumeration on an already-attached oracle. Appends a
// per-run record to stats.st_runs.
template <ConnectivityOracle Oracle, class Sink>
void run_st_enumeration(Graph& g, Oracle& o, VertexId s, VertexId t, Sink& sink,
                        EnumStats& stats, DistanceLabels& labels,
                        const std::optional<Path>& seed = std::nullopt) {
    const std::uint64_t leaves0 = stats.leaves;
    const std::uint64_t branching0 = stats.branching_nodes;
    const std::uint64_t unary0 = stats.unary_nodes;
    const std::uint64_t internal0 = stats.internal_nodes;
    const std::uint64_t children0 = stats.children_total;
    std::size_t run_depth = 0;
    if (o.connected(s, t)) {
        Path first;
        if (seed) {
            contract(!seed->empty() && seed->front() == s && seed->back() == t &&
                         is_valid_path(g, *seed),
                     "seed certificate is not a valid s-t path");
            first = *seed;
        } else {
            auto p = o.extract_path(s, t);
            contract(p.has_value(), "oracle said connected but gave no path");
            first = std::move(*p);
        }
        CertView cert = CertView::own(std::move(first));
        labels.relabel(cert);
        StPathLister<Oracle, Sink> lister(g, o, t, sink, stats, labels);
        lister.start(s, std::move(cert));
        run_depth = lister.run_max_depth();
    }
    StRunStats run;
    run.s = s;
    run.t = t;
    run.solutions = stats.leaves - leaves0;
    run.branching_nodes = stats.branching_nodes - branching0;
    run.unary_nodes = stats.unary_nodes - unary0;
    run.internal_nodes = stats.internal_nodes - internal0;
    run.children_total = stats.children_total - children0;
    run.max_depth = run_depth;
    stats.st_runs.push_back(run);
}

}  // namespace detail

// Lists every chordless s-t path of g exactly once, in certificate
// discovery order. The graph is mutated during the run and restored
// before returning.
template <class Sink>
EnumStats list_st_paths(Graph& g, VertexId s, VertexId t, Sink&& sink,
                        const EnumOptions& opts = {}) {
    contract(g.alive(s) && g.alive(t), "list_st_paths: endpoint not alive");
    contract(s != t, "list_st_paths: s == t");
    EnumStats stats;
    const auto t0 = std::chrono::steady_clock::now();
    DistanceLabels labels(g.vertex_count());
    DelayRecorder delays(stats, opts.record_delays);
    auto counted_sink = [&](const Path& p) {
        delays.sample();
        ++stats.solutions;
        sink(p);
    };
    auto run = [&](auto& oracle) {
        detail::run_st_enumeration(g, oracle, s, t, counted_sink, stats, labels,
                                   opts.seed_certificate);
        stats.oracle = oracle.counters();
    };
    if (opts.oracle == OracleKind::fast) {
        HdtConnectivity oracle(g);
        run(oracle);
    } else {
        BfsConnectivity oracle(g);
        run(oracle);
    }
    stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return stats;
}

struct CycleEnumOptions {
    std::size_t min_len = 3;  // >= 3; 4 keeps only holes
    OracleKind oracle = OracleKind::fast;
    bool record_delays = true;
    // Test hook: observes (s, t, per-run stats, per-run st-paths) after each
    // inner enumeration. Populating the path list costs a copy per solution.
    std::function<void(const StRunStats&, const std::vector<Path>&)> run_observer;
};

namespace detail {

template <ConnectivityOracle Oracle, class Sink>
void run_cycle_enumeration(Graph& g, Oracle& o, Sink& sink, EnumStats& stats,
                           const CycleEnumOptions& opts, DelayRecorder& delays) {
    const std::size_t n = g.vertex_count();
    DistanceLabels labels(n);

    struct JournalEntry {
        bool is_vertex = false;
        Edge edge{-1, -1};
        RemovalRecord removal;
    };

    std::vector<RemovalRecord> outer_removed;
    for (VertexId s = 0; s < static_cast<VertexId>(n); ++s) {
        if (!g.alive(s)) continue;
        const std::vector<VertexId> targets(g.neighbors(s).begin(),
                                            g.neighbors(s).end());
        std::vector<JournalEntry> journal;
        for (VertexId t : targets) {
            g.remove_edge(s, t);
            o.delete_edge(s, t);
            journal.push_back({false, {s, t}, {}});

            std::vector<Path> run_paths;
            auto cycle_sink = [&](const Path& path) {
                if (opts.run_observer) run_paths.push_back(path);
                if (path.size() >= opts.min_len) {
                    delays.sample();
                    ++stats.solutions;
                    sink(canonical_cycle(path));
                }
            };
            run_st_enumeration(g, o, s, t, cycle_sink, stats, labels);
            if (opts.run_observer) opts.run_observer(stats.st_runs.back(), run_paths);

            RemovalRecord rec = g.remove_vertex(t);
            for (VertexId w : rec.incident) o.delete_edge(t, w);
            journal.push_back({true, {-1, -1}, std::move(rec)});
        }
        for (std::size_t k = journal.size(); k-- > 0;) {
            JournalEntry& e = journal[k];
            if (e.is_vertex) {
                g.restore_vertex(e.removal);
                for (VertexId w : e.removal.incident) o.insert_edge(e.removal.vertex, w);
            } else {
                g.add_edge(e.edge.first, e.edge.second);
                o.insert_edge(e.edge.first, e.edge.second);
            }
        }
        RemovalRecord rec = g.remove_vertex(s);
        for (VertexId w : rec.incident) o.delete_edge(s, w);
        outer_removed.push_back(std::move(rec));
    }
    for (std::size_t k = outer_removed.size(); k-- > 0;) {
        g.restore_vertex(outer_removed[k]);
        for (VertexId w : outer_removed[k].incident)
            o.insert_edge(outer_removed[k].vertex, w);
    }
    stats.oracle = o.counters();
}

}  // namespace detail

// Lists every chordless cycle of length >= min_len exactly once, in
// canonical form. Cycles through the smallest remaining vertex s are found
// as chordless s-t paths closed by the withheld edge (s, t); processed
// targets and finally s itself are removed so no cycle repeats, and the
// graph is restored before returning.
//
// EnumStats.solutions counts emitted cycles; EnumStats.leaves counts
// recursion leaves, i.e. cycles found before the length filter.
template <class Sink>
EnumStats list_chordless_cycles(Graph& g, Sink&& sink,
                                const CycleEnumOptions& opts = {}) {
    contract(opts.min_len >= 3, "list_chordless_cycles: min_len must be >= 3");
    EnumStats stats;
    const auto t0 = std::chrono::steady_clock::now();
    DelayRecorder delays(stats, opts.record_delays);
    if (opts.oracle == OracleKind::fast) {
        HdtConnectivity oracle(g);
        detail::run_cycle_enumeration(g, oracle, sink, stats, opts, delays);
    } else {
        BfsConnectivity oracle(g);
        detail::run_cycle_enumeration(g, oracle, sink, stats, opts, delays);
    }
    stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return stats;
}

}  // namespace chordless
