#pragma once

// Text formats for undirected graphs.
//
// Edge list: one "u v" pair per line, '#' starts a comment, blank lines
// are skipped. Ids are 0-based.
//
// DIMACS-like: "c" comment lines, one "p edge <n> <m>" header, then
// "e <u> <v>" lines with 1-based ids. The header fixes the vertex count;
// ids above it are an error, unreferenced ids become isolated vertices.

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chordless/graph.hpp"

namespace chordless {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline bool blank_or_comment(const std::string& s, char comment_char) {
    for (char c : s) {
        if (c == comment_char) return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace detail

inline LoadResult read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (detail::blank_or_comment(line, '#')) continue;
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v))
            throw ParseError(lineno, "expected two vertex ids");
        std::string trail;
        if (ls >> trail)
            throw ParseError(lineno, "trailing tokens after edge");
        if (u < 0 || v < 0)
            throw ParseError(lineno, "negative vertex id");
        if (u == v)
            throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    return from_edge_list(edges);
}

inline LoadResult read_dimacs(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    long long n = -1;
    std::vector<Edge> edges;
    std::size_t duplicates = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::blank_or_comment(line, 'c')) continue;
        std::istringstream ls(line);
        char kind;
        ls >> kind;
        if (kind == 'p') {
            if (n >= 0) throw ParseError(lineno, "duplicate problem line");
            std::string fmt;
            long long m;
            if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
                throw ParseError(lineno, "expected 'p edge <n> <m>'");
            g = Graph(static_cast<std::size_t>(n));
        } else if (kind == 'e') {
            if (n < 0) throw ParseError(lineno, "edge before problem line");
            long long u, v;
            if (!(ls >> u >> v))
                throw ParseError(lineno, "expected 'e <u> <v>'");
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError(lineno, "vertex id outside 1.." + std::to_string(n));
            if (u == v)
                throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
            VertexId a = static_cast<VertexId>(u - 1);
            VertexId b = static_cast<VertexId>(v - 1);
            if (g.has_edge(a, b)) {
                ++duplicates;
            } else {
                g.add_edge(a, b);
            }
        } else {
            throw ParseError(lineno, std::string("unknown line kind '") + kind + "'");
        }
    }
    if (n < 0) throw ParseError(lineno, "missing problem line");
    return LoadResult{std::move(g), duplicates};
}

// Sniffs the format: a DIMACS file announces itself with a 'p' or 'c' line.
inline LoadResult read_graph_auto(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::istringstream first_pass(text);
    std::string line;
    bool dimacs = false;
    while (std::getline(first_pass, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        dimacs = (tok == "p" || tok == "c" || tok == "e");
        break;
    }
    std::istringstream data(text);
    return dimacs ? read_dimacs(data) : read_edge_list(data);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    for (const auto& [u, v] : edge_list(g)) out << u << ' ' << v << '\n';
}

}  // namespace chordless
