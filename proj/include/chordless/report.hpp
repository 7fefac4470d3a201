#pragma once

// Fixed-schema JSON export of one enumeration run. The key set is part of
// the CLI contract; nothing else goes in:
//   n, m, solutions, leaves, branching_nodes, unary_nodes, max_depth,
//   nongood_scans_max, oracle{queries, path_extractions, edge_deletes,
//   edge_inserts}, wall_ms, delay_p50_us, delay_p95_us, delay_max_us

#include <algorithm>
#include <cmath>
#include <vector>

#include "json.hpp"

#include "chordless/enumerate.hpp"
#include "chordless/graph.hpp"

namespace chordless {

// Nearest-rank percentile; p in (0, 1]. Empty input reports 0.
inline double percentile(std::vector<double> samples, double p) {
    if (samples.empty()) return 0.0;
    std::sort(samples.begin(), samples.end());
    std::size_t rank = static_cast<std::size_t>(
        std::ceil(p * static_cast<double>(samples.size())));
    if (rank == 0) rank = 1;
    return samples[rank - 1];
}

inline nlohmann::ordered_json run_report(const Graph& g, const EnumStats& st) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["solutions"] = st.solutions;
    j["leaves"] = st.leaves;
    j["branching_nodes"] = st.branching_nodes;
    j["unary_nodes"] = st.unary_nodes;
    j["max_depth"] = st.max_depth;
    j["nongood_scans_max"] = st.nongood_scans_max;
    j["oracle"] = {{"queries", st.oracle.queries},
                   {"path_extractions", st.oracle.path_extractions},
                   {"edge_deletes", st.oracle.edge_deletes},
                   {"edge_inserts", st.oracle.edge_inserts}};
    j["wall_ms"] = st.wall_ms;
    j["delay_p50_us"] = percentile(st.delay_us, 0.50);
    j["delay_p95_us"] = percentile(st.delay_us, 0.95);
    j["delay_max_us"] = st.delay_us.empty()
                            ? 0.0
                            : *std::max_element(st.delay_us.begin(), st.delay_us.end());
    return j;
}

}  // namespace chordless
