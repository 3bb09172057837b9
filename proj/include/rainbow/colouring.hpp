#pragma once

#include <set>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Total edge colouring: colour[i] is the colour of the i-th edge of the
/// target graph, all colours in [0, k).
struct EdgeColouring {
    int k = 0;
    std::vector<int> colour;

    int of(const Graph& g, int u, int v) const
    {
        int idx = g.edge_index(u, v);
        if (idx < 0)
            throw std::invalid_argument("colouring: no such edge");
        return colour[idx];
    }
};

inline void check_total(const Graph& g, const EdgeColouring& c)
{
    if (static_cast<int>(c.colour.size()) != g.edge_count())
        throw std::invalid_argument("colouring: not total over the edge set");
    for (int col : c.colour)
        if (col < 0 || col >= c.k)
            throw std::invalid_argument("colouring: colour out of range");
}

inline int colours_used(const EdgeColouring& c)
{
    return static_cast<int>(std::set<int>(c.colour.begin(), c.colour.end()).size());
}

/// Colouring text format: one "u v colour" line per edge; must be total.
inline EdgeColouring parse_colouring(std::istream& in, const Graph& g)
{
    EdgeColouring c;
    c.colour.assign(g.edge_count(), -1);
    std::string raw, line;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!detail::content_line(raw, line))
            continue;
        std::istringstream iss(line);
        int u, v, col;
        if (!(iss >> u >> v >> col) || col < 0)
            throw parse_error("line " + std::to_string(lineno) + ": expected 'u v colour'");
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
            throw parse_error("line " + std::to_string(lineno) + ": vertex out of range");
        int idx = g.edge_index(u, v);
        if (idx < 0)
            throw parse_error("line " + std::to_string(lineno) + ": no such edge in graph");
        if (c.colour[idx] >= 0)
            throw parse_error("line " + std::to_string(lineno) + ": edge coloured twice");
        c.colour[idx] = col;
        c.k = std::max(c.k, col + 1);
    }
    for (size_t i = 0; i < c.colour.size(); ++i)
        if (c.colour[i] < 0)
            throw parse_error("colouring is not total: edge "
                              + std::to_string(g.edges()[i].first) + " "
                              + std::to_string(g.edges()[i].second) + " missing");
    return c;
}

inline void write_colouring(std::ostream& out, const Graph& g, const EdgeColouring& c)
{
    check_total(g, c);
    for (int i = 0; i < g.edge_count(); ++i)
        out << g.edges()[i].first << ' ' << g.edges()[i].second << ' ' << c.colour[i] << '\n';
}

}  // namespace rainbow
