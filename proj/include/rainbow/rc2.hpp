#pragma once

#include "rainbow/separation.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

/// Decides whether g admits a 2-colour rainbow colouring. With two colours
/// every rainbow path has at most two edges, so each non-adjacent pair
/// needs a common neighbour whose two connecting edges differ in colour;
/// a pair without a common neighbour settles the answer immediately.
inline std::optional<EdgeColouring> solve_rc2(const Graph& g)
{
    if (!is_connected(g))
        throw std::invalid_argument("solve_rc2: graph must be connected");
    SeparationProblem problem;
    problem.var_count = g.edge_count();
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v))
                continue;
            std::vector<std::pair<int, int>> witnesses;
            for (int w : g.neighbours(u))
                if (g.adjacent(w, v))
                    witnesses.push_back({g.edge_index(u, w), g.edge_index(w, v)});
            if (witnesses.empty())
                return std::nullopt;  // diameter > 2
            problem.pairs.push_back(std::move(witnesses));
        }
    auto values = solve_separation(problem);
    if (!values)
        return std::nullopt;
    return EdgeColouring{2, std::move(*values)};
}

}  // namespace rainbow
