#pragma once

// Cross-checks of the enumerator against the exhaustive reference
// implementations, written so the CLI, the unit tests, and the acceptance
// suite all drive the same machinery. Every case checks, on top of its
// primary claim:
//   - output validity (simple, chordless, correct endpoints, no duplicates)
//   - recursion-tree arithmetic: leaves = paths found, branching nodes =
//     paths - 1, internal nodes = distinct proper prefixes, depth <= n
//   - wasted-scan accounting against an independent replay of the
//     sibling-removal discipline (per-path bound 2n)
//   - exact graph restoration after the run

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chordless/brute_force.hpp"
#include "chordless/enumerate.hpp"
#include "chordless/generators.hpp"
#include "chordless/graph.hpp"

namespace chordless {

struct VerifyFailure {
    std::string what;
    std::vector<Edge> edges;
    VertexId s = -1;
    VertexId t = -1;

    std::string reproducer() const {
        std::ostringstream os;
        os << what << "\n  graph:";
        for (const auto& [u, v] : edges) os << " (" << u << "," << v << ")";
        if (s >= 0) os << "\n  s=" << s;
        if (t >= 0) os << " t=" << t;
        return os.str();
    }
};

namespace detail {

inline void fill_failure(VerifyFailure* out, const Graph& g, VertexId s, VertexId t,
                         const std::string& what) {
    if (!out) return;
    out->what = what;
    out->edges = edge_list(g);
    out->s = s;
    out->t = t;
}

}  // namespace detail

inline std::uint64_t distinct_proper_prefixes(const std::vector<Path>& solutions) {
    std::set<Path> prefixes;
    for (const Path& p : solutions)
        for (std::size_t len = 1; len < p.size(); ++len)
            prefixes.insert(Path(p.begin(), p.begin() + static_cast<long>(len)));
    return prefixes.size();
}

// Replays the sibling-removal discipline with brute-force good sets to
// predict the wasted-scan total charged to one solution. Independent of
// the enumerator: the only shared ingredient is the discipline itself.
inline std::uint64_t expected_nongood_for_solution(const Graph& pristine,
                                                   const Path& solution, VertexId t) {
    Graph g = pristine;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i + 1 < solution.size(); ++i) {
        const VertexId u = solution[i];
        const Path prefix(solution.begin(), solution.begin() + static_cast<long>(i) + 1);
        const std::vector<VertexId> goods = brute_good_neighbors(pristine, prefix, t);
        contract(g.degree(u) >= goods.size(),
                 "expected_nongood_for_solution: good set not alive");
        total += g.degree(u) - goods.size();
        for (VertexId w : goods)
            if (w != solution[i + 1]) g.remove_vertex(w);
    }
    return total;
}

// Recursion-tree arithmetic shared by every run. Branching nodes match
// solutions - 1 exactly only on binary trees (a node with three children
// is one branching node but two extra solutions), so the exact identity is
// checked through child counts and the node count gets the upper bound.
inline bool check_run_arithmetic(const StRunStats& run, std::size_t n,
                                 std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (run.internal_nodes != run.branching_nodes + run.unary_nodes)
        return fail("internal nodes != branching + unary");
    if (run.solutions == 0) {
        if (run.internal_nodes != 0) return fail("internal nodes without solutions");
        if (run.children_total != 0) return fail("children without solutions");
    } else {
        if (run.children_total - run.internal_nodes + 1 != run.solutions)
            return fail("child count identity broken (some child yielded no leaf)");
        if (run.branching_nodes > run.solutions - 1)
            return fail("more branching nodes than solutions - 1");
    }
    if (run.max_depth > n) return fail("recursion deeper than n");
    return true;
}

// Full cross-check of one (s, t) path enumeration against brute force.
inline bool verify_paths_case(const Graph& input, VertexId s, VertexId t,
                              OracleKind kind, VerifyFailure* out = nullptr,
                              bool inject_fault = false) {
    Graph g = input;
    const Graph snapshot = g;
    auto fail = [&](const std::string& what) {
        detail::fill_failure(out, snapshot, s, t, what);
        return false;
    };

    std::vector<Path> got;
    EnumOptions opts;
    opts.oracle = kind;
    opts.record_delays = false;
    EnumStats st = list_st_paths(g, s, t, [&](const Path& p) { got.push_back(p); }, opts);
    if (inject_fault && !got.empty()) got.pop_back();

    if (!(g == snapshot)) return fail("graph not restored after enumeration");

    std::set<Path> seen;
    for (const Path& p : got) {
        if (p.empty() || p.front() != s || p.back() != t)
            return fail("emitted path has wrong endpoints");
        if (!is_valid_path(snapshot, p)) return fail("emitted sequence is not a path");
        if (!is_chordless(snapshot, p)) return fail("emitted path has a chord");
        if (!seen.insert(p).second) return fail("duplicate path emitted");
    }

    const std::vector<Path> want = brute_chordless_st_paths(snapshot, s, t);
    if (std::set<Path>(want.begin(), want.end()) != seen)
        return fail("path set differs from brute force");

    if (st.leaves != want.size()) return fail("leaf counter does not match emissions");
    if (st.st_runs.size() != 1) return fail("expected exactly one run record");
    std::string why;
    if (!check_run_arithmetic(st.st_runs[0], snapshot.vertex_count(), &why))
        return fail("run arithmetic: " + why);
    if (st.internal_nodes != distinct_proper_prefixes(want))
        return fail("internal nodes != distinct proper prefixes");

    std::uint64_t want_total = 0, want_max = 0;
    for (const Path& p : want) {
        std::uint64_t e = expected_nongood_for_solution(snapshot, p, t);
        want_total += e;
        want_max = std::max(want_max, e);
        if (e > 2 * snapshot.vertex_count())
            return fail("predicted wasted scans exceed 2n");
    }
    if (st.nongood_scans_total != want_total)
        return fail("wasted-scan total differs from discipline replay");
    if (st.nongood_scans_max != want_max)
        return fail("wasted-scan max differs from discipline replay");
    if (st.nongood_scans_max > 2 * snapshot.vertex_count())
        return fail("wasted scans exceed 2n for some path");

    return true;
}

// Full cross-check of cycle enumeration, including per-run arithmetic of
// every inner (s, t) recursion and the min-length filter.
inline bool verify_cycles_case(const Graph& input, std::size_t min_len,
                               OracleKind kind, VerifyFailure* out = nullptr) {
    Graph g = input;
    const Graph snapshot = g;
    auto fail = [&](const std::string& what) {
        detail::fill_failure(out, snapshot, -1, -1, what);
        return false;
    };

    std::vector<Path> got;
    std::string run_problem;
    CycleEnumOptions opts;
    opts.min_len = min_len;
    opts.oracle = kind;
    opts.record_delays = false;
    opts.run_observer = [&](const StRunStats& run, const std::vector<Path>& paths) {
        std::string why;
        if (!check_run_arithmetic(run, snapshot.vertex_count(), &why))
            run_problem = why;
        if (run.solutions != paths.size()) run_problem = "run leaves != run paths";
    };
    EnumStats st =
        list_chordless_cycles(g, [&](const Path& c) { got.push_back(c); }, opts);

    if (!(g == snapshot)) return fail("graph not restored after enumeration");
    if (!run_problem.empty()) return fail("inner run arithmetic: " + run_problem);

    std::set<Path> seen;
    for (const Path& c : got) {
        if (!is_valid_path(snapshot, c, /*as_cycle=*/true))
            return fail("emitted sequence is not a cycle");
        if (!is_chordless(snapshot, c, /*as_cycle=*/true))
            return fail("emitted cycle has a chord");
        if (c != canonical_cycle(c)) return fail("cycle not in canonical form");
        if (c.size() < min_len) return fail("cycle shorter than min length");
        if (!seen.insert(c).second) return fail("duplicate cycle emitted");
    }

    const std::vector<Path> want = brute_chordless_cycles(snapshot, min_len);
    if (std::set<Path>(want.begin(), want.end()) != seen)
        return fail("cycle set differs from brute force");

    const std::vector<Path> all = brute_chordless_cycles(snapshot, 3);
    if (st.leaves != all.size())
        return fail("recursion leaves != total chordless cycles");
    if (st.solutions != want.size()) return fail("solution counter != emitted cycles");

    return true;
}

// Sets up the exact graph state the recursion would present at an interior
// node (good neighbours of all proper prefix vertices removed), runs the
// cleanup loop there, and compares the surviving set with brute force.
inline bool verify_cleanup_case(const Graph& input, const Path& prefix, VertexId t,
                                OracleKind kind, VerifyFailure* out = nullptr) {
    contract(prefix.size() >= 1 && prefix.back() != t,
             "verify_cleanup_case: prefix must stop short of t");
    Graph g = input;
    const Graph snapshot = g;
    const VertexId u = prefix.back();
    auto fail = [&](const std::string& what) {
        detail::fill_failure(out, snapshot, prefix.front(), t, what);
        return false;
    };

    std::vector<RemovalRecord> staged;
    for (std::size_t j = 0; j + 1 < prefix.size(); ++j) {
        const Path sub(prefix.begin(), prefix.begin() + static_cast<long>(j) + 1);
        for (VertexId w : brute_good_neighbors(snapshot, sub, t))
            if (w != prefix[j + 1]) staged.push_back(g.remove_vertex(w));
    }

    const std::vector<VertexId> want = brute_good_neighbors(snapshot, prefix, t);

    bool ok = true;
    std::string what;
    auto with_oracle = [&](auto oracle) {
        auto cert_opt = oracle.extract_path(u, t);
        if (!cert_opt) {
            ok = false;
            what = "prefix head disconnected from t in staged graph";
            return;
        }
        DistanceLabels labels(g.vertex_count());
        EnumStats st;
        auto sink = [](const Path&) {};
        StPathLister<decltype(oracle), decltype(sink)> lister(g, oracle, t, sink, st,
                                                              labels);
        CertView cert = CertView::own(std::move(*cert_opt));
        labels.relabel(cert);
        std::vector<GoodEntry> entries = lister.cleanup_good_neighbors(u, cert);

        std::vector<VertexId> found;
        for (const GoodEntry& e : entries) {
            found.push_back(e.v);
            if (e.suffix.size() < 1 || e.suffix[0] != e.v || e.suffix.back() != t) {
                ok = false;
                what = "cleanup entry carries a bad certificate suffix";
            }
        }
        if (oracle.connected(u, t)) {
            ok = false;
            what = "u still reaches t after cleanup";
        }
        std::vector<VertexId> sorted_found = found;
        std::sort(sorted_found.begin(), sorted_found.end());
        if (ok && sorted_found != want) {
            ok = false;
            what = "cleanup set differs from brute-force good neighbours";
        }
        for (std::size_t k = entries.size(); k-- > 0;)
            g.restore_vertex(entries[k].removal);
    };
    if (kind == OracleKind::fast)
        with_oracle(HdtConnectivity(g));
    else
        with_oracle(BfsConnectivity(g));

    for (std::size_t k = staged.size(); k-- > 0;) g.restore_vertex(staged[k]);
    if (!ok) return fail(what);
    if (!(g == snapshot)) return fail("graph not restored after cleanup case");
    return true;
}

// Random edge churn on the fast oracle, checked move by move against the
// reference oracle.
inline bool verify_connectivity_fuzz(std::size_t n, std::size_t m, std::uint64_t seed,
                                     std::size_t ops, VerifyFailure* out = nullptr) {
    Graph g = gen_gnm(n, m, seed);
    auto fail = [&](const std::string& what) {
        detail::fill_failure(out, g, -1, -1, what);
        return false;
    };

    HdtConnectivity fast(g);
    BfsConnectivity ref(g);
    StableRng rng(seed ^ 0x9e3779b97f4a7c15ull);

    for (std::size_t step = 0; step < ops; ++step) {
        const VertexId u = static_cast<VertexId>(rng.below(n));
        const VertexId v = static_cast<VertexId>(rng.below(n));
        if (u == v) continue;
        switch (rng.below(3)) {
            case 0: {  // toggle the edge in graph and both oracles
                if (g.has_edge(u, v)) {
                    g.remove_edge(u, v);
                    fast.delete_edge(u, v);
                    ref.delete_edge(u, v);
                } else {
                    g.add_edge(u, v);
                    fast.insert_edge(u, v);
                    ref.insert_edge(u, v);
                }
                break;
            }
            case 1: {
                if (fast.connected(u, v) != ref.connected(u, v))
                    return fail("connectivity answers diverge at step " +
                                std::to_string(step));
                break;
            }
            case 2: {
                auto pf = fast.extract_path(u, v);
                auto pr = ref.extract_path(u, v);
                if (pf.has_value() != pr.has_value())
                    return fail("path presence diverges at step " + std::to_string(step));
                if (pf) {
                    if (pf->front() != u || pf->back() != v)
                        return fail("fast oracle path has wrong endpoints");
                    if (!is_valid_path(g, *pf))
                        return fail("fast oracle path is not a live simple path");
                }
                break;
            }
        }
    }

    for (VertexId a = 0; a < static_cast<VertexId>(n); ++a)
        for (VertexId b = a + 1; b < static_cast<VertexId>(n); ++b)
            if (fast.connected(a, b) != ref.connected(a, b))
                return fail("final connectivity matrix diverges");
    return true;
}

}  // namespace chordless
