#pragma once

// Command-line front end. Kept in a header so tests can drive run_cli()
// in-process with captured streams instead of spawning the binary.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "chordless/brute_force.hpp"
#include "chordless/enumerate.hpp"
#include "chordless/generators.hpp"
#include "chordless/graph.hpp"
#include "chordless/io.hpp"
#include "chordless/report.hpp"
#include "chordless/verify.hpp"

namespace chordless {
namespace detail {

inline Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return std::move(read_graph_auto(in).graph);
}

inline OracleKind parse_oracle(const std::string& name) {
    return name == "reference" ? OracleKind::reference : OracleKind::fast;
}

inline void print_solution(std::ostream& out, const Path& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out << ' ';
        out << p[i];
    }
    out << '\n';
}

inline bool write_text_file(const std::string& path, const std::string& body,
                            std::ostream& err) {
    std::ofstream f(path);
    if (!f) {
        err << "cannot write '" << path << "'\n";
        return false;
    }
    f << body;
    return true;
}

inline int cmd_paths(const std::string& input, VertexId s, VertexId t,
                     const std::string& oracle, bool stream, bool count_only,
                     const std::string& stats_out, std::ostream& out,
                     std::ostream& err) {
    Graph g = load_graph_file(input);
    const auto n = static_cast<VertexId>(g.vertex_count());
    if (s < 0 || s >= n || t < 0 || t >= n || s == t) {
        err << "terminals s=" << s << " t=" << t << " invalid for n=" << n << "\n";
        return 2;
    }
    EnumOptions opts;
    opts.oracle = parse_oracle(oracle);
    std::vector<Path> buffered;
    auto sink = [&](const Path& p) {
        if (count_only) return;
        if (stream)
            print_solution(out, p);
        else
            buffered.push_back(p);
    };
    EnumStats st = list_st_paths(g, s, t, sink, opts);
    std::sort(buffered.begin(), buffered.end());
    for (const Path& p : buffered) print_solution(out, p);
    if (count_only) out << st.solutions << '\n';
    if (!stats_out.empty() &&
        !write_text_file(stats_out, run_report(g, st).dump(2) + "\n", err))
        return 2;
    return 0;
}

inline int cmd_cycles(const std::string& input, std::size_t min_len,
                      const std::string& oracle, bool stream, bool count_only,
                      const std::string& stats_out, std::ostream& out,
                      std::ostream& err) {
    if (min_len < 3) {
        err << "--min-length must be at least 3\n";
        return 2;
    }
    Graph g = load_graph_file(input);
    CycleEnumOptions opts;
    opts.min_len = min_len;
    opts.oracle = parse_oracle(oracle);
    std::vector<Path> buffered;
    auto sink = [&](const Path& c) {
        if (count_only) return;
        if (stream)
            print_solution(out, c);
        else
            buffered.push_back(c);
    };
    EnumStats st = list_chordless_cycles(g, sink, opts);
    std::sort(buffered.begin(), buffered.end());
    for (const Path& c : buffered) print_solution(out, c);
    if (count_only) out << st.solutions << '\n';
    if (!stats_out.empty() &&
        !write_text_file(stats_out, run_report(g, st).dump(2) + "\n", err))
        return 2;
    return 0;
}

// Everything the cross-check suite knows how to throw at one graph: both
// oracles, every terminal pair, cycles at two length cutoffs, and a budget
// of cleanup-loop cases built from prefixes of real solutions.
inline bool verify_graph_suite(const Graph& g, bool inject_fault, std::size_t* cases,
                               VerifyFailure* failure) {
    const auto n = static_cast<VertexId>(g.vertex_count());
    for (OracleKind kind : {OracleKind::reference, OracleKind::fast}) {
        for (VertexId s = 0; s < n; ++s)
            for (VertexId t = s + 1; t < n; ++t) {
                ++*cases;
                if (!verify_paths_case(g, s, t, kind, failure, inject_fault))
                    return false;
            }
        for (std::size_t len : {std::size_t{3}, std::size_t{4}}) {
            ++*cases;
            if (!verify_cycles_case(g, len, kind, failure)) return false;
        }
    }
    std::size_t budget = 60;
    for (VertexId s = 0; s < n && budget > 0; ++s)
        for (VertexId t = s + 1; t < n && budget > 0; ++t)
            for (const Path& p : brute_chordless_st_paths(g, s, t)) {
                if (budget == 0) break;
                for (std::size_t i = 0; i + 1 < p.size() && budget > 0; ++i) {
                    --budget;
                    ++*cases;
                    const Path prefix(p.begin(), p.begin() + static_cast<long>(i) + 1);
                    if (!verify_cleanup_case(g, prefix, t, OracleKind::fast, failure))
                        return false;
                }
            }
    return true;
}

inline int cmd_verify(const std::string& input, const std::string& family,
                      std::size_t n, std::size_t m, std::size_t seeds,
                      std::uint64_t seed_base, std::size_t max_n, bool inject_fault,
                      std::ostream& out, std::ostream& err) {
    std::vector<std::pair<std::string, Graph>> instances;
    if (!input.empty()) {
        instances.emplace_back(input, load_graph_file(input));
    } else if (family == "gnm") {
        for (std::size_t i = 0; i < seeds; ++i) {
            const std::uint64_t seed = seed_base + i;
            instances.emplace_back("gnm(n=" + std::to_string(n) +
                                       ", m=" + std::to_string(m) +
                                       ", seed=" + std::to_string(seed) + ")",
                                   gen_gnm(n, m, seed));
        }
    } else {
        err << "verify needs an input file or --family gnm\n";
        return 2;
    }

    std::size_t cases = 0;
    for (const auto& [name, g] : instances) {
        if (g.vertex_count() > max_n) {
            err << name << ": n=" << g.vertex_count() << " exceeds --max-n " << max_n
                << "\n";
            return 2;
        }
        VerifyFailure failure;
        if (!verify_graph_suite(g, inject_fault, &cases, &failure)) {
            err << "FAIL " << name << ": " << failure.reproducer() << "\n";
            return 1;
        }
        out << "ok " << name << "\n";
    }
    out << "verified " << cases << " cases across " << instances.size()
        << " graph(s)\n";
    return 0;
}

inline int cmd_bench(const std::vector<std::size_t>& r_list, const std::string& oracle,
                     const std::string& report_out, std::ostream& out,
                     std::ostream& err) {
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (std::size_t r : r_list) {
        if (r < 2) {
            err << "bench r values must be at least 2\n";
            return 2;
        }
        Graph g = gen_bipartite_path(r);
        const auto [s, t] = bipartite_path_terminals(r);
        EnumOptions opts;
        opts.oracle = parse_oracle(oracle);
        EnumStats st = list_st_paths(g, s, t, [](const Path&) {}, opts);
        const double mean =
            st.solutions > 0
                ? static_cast<double>(st.nongood_scans_total) /
                      static_cast<double>(st.solutions)
                : 0.0;
        out << "family=bipartite-path r=" << r << " n=" << g.vertex_count()
            << " m=" << g.edge_count() << " oracle=" << oracle
            << " solutions=" << st.solutions
            << " nongood_max=" << st.nongood_scans_max
            << " nongood_total=" << st.nongood_scans_total << " nongood_mean=" << mean
            << " wall_ms=" << st.wall_ms << "\n";
        nlohmann::ordered_json entry;
        entry["family"] = "bipartite-path";
        entry["r"] = r;
        entry["s"] = s;
        entry["t"] = t;
        entry["oracle"] = oracle;
        entry["nongood_scans_total"] = st.nongood_scans_total;
        entry["nongood_mean_per_solution"] = mean;
        entry["stats"] = run_report(g, st);
        reports.push_back(std::move(entry));
    }
    if (!report_out.empty() &&
        !write_text_file(report_out, reports.dump(2) + "\n", err))
        return 2;
    return 0;
}

inline int cmd_gen(const std::string& family, std::size_t k, std::size_t r,
                   std::size_t n, std::size_t m, std::uint64_t seed,
                   const std::string& output, std::ostream& out, std::ostream& err) {
    Graph g;
    try {
        if (family == "heptagon-chords") {
            g = gen_heptagon_chords();
        } else if (family == "hexagon-chord") {
            g = gen_hexagon_chord();
        } else if (family == "cycle") {
            g = gen_cycle(k);
        } else if (family == "complete") {
            g = gen_complete(k);
        } else if (family == "bipartite-path") {
            g = gen_bipartite_path(r);
        } else if (family == "gnm") {
            g = gen_gnm(n, m, seed);
        } else {
            err << "unknown family '" << family << "'\n";
            return 2;
        }
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    }
    if (output.empty()) {
        write_edge_list(out, g);
        return 0;
    }
    std::ostringstream body;
    write_edge_list(body, g);
    return write_text_file(output, body.str(), err) ? 0 : 2;
}

}  // namespace detail

// args excludes the program name. Returns the process exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"chordless (induced) st-path and cycle lister"};
    app.require_subcommand(1);

    std::string input, stats_out, oracle = "fast", report_out, output;
    std::string family;
    VertexId s = 0, t = 0;
    std::size_t min_len = 3, max_n = kBruteForceVertexGuard;
    std::size_t gn = 8, gm = 14, seeds = 20, k = 0, r = 0;
    std::uint64_t seed = 1, seed_base = 1;
    bool stream = false, count_only = false, inject_fault = false;
    std::vector<std::size_t> r_list;

    auto add_oracle = [&](CLI::App* sub) {
        sub->add_option("--oracle", oracle, "connectivity oracle")
            ->check(CLI::IsMember({"fast", "reference"}));
    };

    CLI::App* paths = app.add_subcommand(
        "paths", "list all chordless s-t paths, one per line");
    paths->add_option("input", input, "graph file (edge list or DIMACS)")->required();
    paths->add_option("s", s, "source vertex")->required();
    paths->add_option("t", t, "target vertex")->required();
    add_oracle(paths);
    paths->add_flag("--stream", stream,
                    "print in discovery order instead of sorting");
    paths->add_flag("--count-only", count_only, "print only the solution count");
    paths->add_option("--stats-out", stats_out, "write run statistics JSON here");

    CLI::App* cycles = app.add_subcommand(
        "cycles", "list all chordless cycles in canonical form, one per line");
    cycles->add_option("input", input, "graph file (edge list or DIMACS)")
        ->required();
    cycles->add_option("--min-length", min_len,
                       "drop cycles shorter than this (4 lists only holes)");
    add_oracle(cycles);
    cycles->add_flag("--stream", stream,
                     "print in discovery order instead of sorting");
    cycles->add_flag("--count-only", count_only, "print only the solution count");
    cycles->add_option("--stats-out", stats_out, "write run statistics JSON here");

    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check the enumerator against brute force");
    verify->add_option("input", input, "graph file to verify");
    verify->add_option("--family", family, "generated family (gnm)")
        ->check(CLI::IsMember({"gnm"}));
    verify->add_option("--n", gn, "gnm vertex count");
    verify->add_option("--m", gm, "gnm edge count");
    verify->add_option("--seeds", seeds, "number of gnm instances");
    verify->add_option("--seed-base", seed_base, "first gnm seed");
    verify->add_option("--max-n", max_n, "largest graph the suite accepts")
        ->check(CLI::Range(std::size_t{2}, kBruteForceVertexGuard));
    verify->add_flag("--inject-fault", inject_fault,
                     "drop one solution on purpose to exercise the failure path");

    CLI::App* bench = app.add_subcommand(
        "bench", "enumerate the bipartite-path family and report cost counters");
    bench->add_option("--r-list", r_list, "block sizes to run")
        ->required()
        ->delimiter(',');
    add_oracle(bench);
    bench->add_option("--report-out", report_out, "write JSON reports here");

    CLI::App* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
    gen->add_option("--family", family, "graph family")
        ->required()
        ->check(CLI::IsMember({"heptagon-chords", "hexagon-chord", "cycle",
                               "complete", "bipartite-path", "gnm"}));
    gen->add_option("--k", k, "cycle length or clique size");
    gen->add_option("--r", r, "bipartite-path block size");
    gen->add_option("--n", gn, "gnm vertex count");
    gen->add_option("--m", gm, "gnm edge count");
    gen->add_option("--seed", seed, "gnm seed");
    gen->add_option("-o,--output", output, "output file (default stdout)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(paths))
            return detail::cmd_paths(input, s, t, oracle, stream, count_only,
                                     stats_out, out, err);
        if (app.got_subcommand(cycles))
            return detail::cmd_cycles(input, min_len, oracle, stream, count_only,
                                      stats_out, out, err);
        if (app.got_subcommand(verify))
            return detail::cmd_verify(input, family, gn, gm, seeds, seed_base, max_n,
                                      inject_fault, out, err);
        if (app.got_subcommand(bench))
            return detail::cmd_bench(r_list, oracle, report_out, out, err);
        if (app.got_subcommand(gen))
            return detail::cmd_gen(family, k, r, gn, gm, seed, output, out, err);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace chordless
