#pragma once

#include <numeric>
#include <optional>

#include "rainbow/graph.hpp"

namespace rainbow {

/// A clique/independent-set partition of the vertices of a split graph.
/// The clique side is maximal: no independent vertex sees all of it.
struct SplitPartition {
    std::vector<int> clique;
    std::vector<int> independent;
};

/// Split recognition via the degree-sequence characterization: with degrees
/// d_1 >= ... >= d_n and h = max{i : d_i >= i-1}, the graph is split iff
/// sum_{i<=h} d_i = h(h-1) + sum_{i>h} d_i, in which case the h
/// highest-degree vertices form a clique and the rest an independent set.
/// The clique is then repaired to maximality.
inline std::optional<SplitPartition> recognize_split(const Graph& g)
{
    int n = g.vertex_count();
    if (n == 0)
        return SplitPartition{};
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b))
            return g.degree(a) > g.degree(b);
        return a < b;
    });
    int h = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(order[i]) >= i)
            h = i + 1;
    long long lhs = 0, rhs = static_cast<long long>(h) * (h - 1);
    for (int i = 0; i < n; ++i)
        (i < h ? lhs : rhs) += g.degree(order[i]);
    if (lhs != rhs)
        return std::nullopt;

    std::vector<bool> in_clique(n, false);
    for (int i = 0; i < h; ++i)
        in_clique[order[i]] = true;

    // Repair to maximality: pull in any independent vertex adjacent to the
    // whole clique. Each move strictly grows the clique, so this terminates.
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v = 0; v < n; ++v) {
            if (in_clique[v])
                continue;
            bool all = true;
            for (int u = 0; u < n && all; ++u)
                if (u != v && in_clique[u] && !g.adjacent(u, v))
                    all = false;
            if (all) {
                in_clique[v] = true;
                moved = true;
            }
        }
    }

    SplitPartition sp;
    for (int v = 0; v < n; ++v)
        (in_clique[v] ? sp.clique : sp.independent).push_back(v);
    for (int a : sp.clique)
        for (int b : sp.clique)
            if (a < b && !g.adjacent(a, b))
                return std::nullopt;
    for (int a : sp.independent)
        for (int b : sp.independent)
            if (a < b && g.adjacent(a, b))
                return std::nullopt;
    return sp;
}

/// Threshold test: split, and the independent-set neighbourhoods form a
/// chain under inclusion. Sorting by degree makes consecutive inclusion
/// checks sufficient.
inline bool is_threshold(const Graph& g)
{
    auto sp = recognize_split(g);
    if (!sp)
        return false;
    std::vector<int> ind = sp->independent;
    std::sort(ind.begin(), ind.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b))
            return g.degree(a) < g.degree(b);
        return a < b;
    });
    for (size_t i = 0; i + 1 < ind.size(); ++i) {
        const auto& small = g.neighbours(ind[i]);
        const auto& big = g.neighbours(ind[i + 1]);
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
            return false;
    }
    return true;
}

}  // namespace rainbow
