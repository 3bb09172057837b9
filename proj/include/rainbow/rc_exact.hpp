#pragma once

#include "rainbow/verify.hpp"

namespace rainbow {

inline constexpr int kDefaultEdgeLimit = 15;

/// max(diameter, bridge count, pendant count, 1, and 2 unless complete).
/// Only complete graphs can be rainbow coloured with one colour.
inline int rc_lower_bound(const Graph& g)
{
    if (!is_connected(g))
        throw std::invalid_argument("rc: disconnected graphs cannot be rainbow coloured");
    if (is_complete(g))
        return 1;  // exact, and sidesteps K2 where both endpoints are pendant
    int lb = std::max(2, diameter(g));
    lb = std::max(lb, static_cast<int>(bridges(g).size()));
    lb = std::max(lb, static_cast<int>(pendant_set(g).size()));
    return lb;
}

/// Searches for a rainbow colouring with at most k colours by enumerating
/// colourings in canonical order: the colour of each edge is at most one
/// more than the largest colour on earlier edges, which quotients out
/// colour permutations. Exponential; caller gates the edge count.
inline std::optional<EdgeColouring> find_colouring(const Graph& g, int k)
{
    int m = g.edge_count();
    EdgeColouring c;
    c.k = k;
    c.colour.assign(m, 0);
    if (m == 0)
        return verify_rainbow(g, c).connected ? std::optional<EdgeColouring>(c) : std::nullopt;

    // A pair that defeated an earlier candidate tends to defeat the next
    // ones too, so recheck it first with the cheap single-pair search.
    Edge last_fail{-1, -1};
    bool have_fail = false;
    std::vector<int> maxc(m, 0);  // largest colour among edges before i
    int i = 0;
    c.colour[0] = -1;
    while (i >= 0) {
        ++c.colour[i];
        if (c.colour[i] >= k || c.colour[i] > maxc[i]) {
            --i;
            continue;
        }
        if (i + 1 < m) {
            ++i;
            maxc[i] = std::max(maxc[i - 1], c.colour[i - 1] + 1);
            c.colour[i] = -1;
            continue;
        }
        if (have_fail && !has_rainbow_path(g, c, last_fail.first, last_fail.second))
            continue;
        RainbowReport report = verify_rainbow(g, c);
        if (report.connected)
            return c;
        last_fail = *report.failing_pair;
        have_fail = true;
    }
    return std::nullopt;
}

struct RcResult {
    int rc = 0;
    EdgeColouring witness;
};

/// Minimal number of colours in a rainbow colouring, with a witness, by
/// iterating k upward from the lower bound.
inline RcResult rc_exact(const Graph& g, int edge_limit = kDefaultEdgeLimit)
{
    if (g.edge_count() > edge_limit)
        throw capacity_error("rc_exact: " + std::to_string(g.edge_count())
                             + " edges exceed limit " + std::to_string(edge_limit));
    int lb = rc_lower_bound(g);
    // A spanning tree with all-distinct colours always works, so the loop
    // terminates by k = max(lb, n-1).
    for (int k = lb;; ++k) {
        if (auto c = find_colouring(g, std::min(k, std::max(1, g.edge_count()))))
            return {k, *c};
    }
}

}  // namespace rainbow
