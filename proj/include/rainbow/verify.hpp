#pragma once

#include <cstdint>
#include <optional>

#include "rainbow/colouring.hpp"

namespace rainbow {

inline constexpr int kDefaultMaskBudget = 20;

/// Outcome of a rainbow-connectivity check. Witness paths (vertex
/// sequences) are filled only on request; a failing pair is always
/// concrete when connectivity fails.
struct RainbowReport {
    bool connected = false;
    std::optional<Edge> failing_pair;
    std::vector<std::pair<Edge, std::vector<int>>> witness_paths;
};

namespace detail {

// Reachability of (vertex, used-colour-set) states from src. A rainbow walk
// can always be shortcut to a simple rainbow path, so walk reachability is
// what we want. Visits states in BFS order; stops early once every target
// vertex has been seen.
class MaskSearch {
public:
    MaskSearch(const Graph& g, const EdgeColouring& c) : g_(g), c_(c)
    {
        seen_.assign(static_cast<size_t>(g.vertex_count()) << c.k, false);
    }

    // Returns the set of vertices reachable by some rainbow path from src.
    // Stops early once every vertex with id >= min_target was reached (the
    // caller has handled smaller ids already), or, when single_target is
    // given, as soon as that one vertex is reached.
    const std::vector<bool>& run(int src, int min_target, int single_target = -1)
    {
        std::fill(seen_.begin(), seen_.end(), false);
        found_.assign(g_.vertex_count(), false);
        int wanted = g_.vertex_count() - min_target;
        int found_count = src >= min_target ? 1 : 0;
        found_[src] = true;
        if (single_target >= 0 && found_[single_target])
            return found_;
        queue_.clear();
        queue_.push_back({src, 0});
        seen_[state(src, 0)] = true;
        for (size_t head = 0; head < queue_.size(); ++head) {
            auto [v, mask] = queue_[head];
            for (int w : g_.neighbours(v)) {
                int col = c_.colour[g_.edge_index(v, w)];
                if (mask & (1u << col))
                    continue;
                uint32_t nmask = mask | (1u << col);
                size_t s = state(w, nmask);
                if (seen_[s])
                    continue;
                seen_[s] = true;
                if (!found_[w]) {
                    found_[w] = true;
                    if (single_target >= 0) {
                        if (w == single_target)
                            return found_;
                    } else if (w >= min_target && ++found_count == wanted) {
                        return found_;
                    }
                }
                queue_.push_back({w, nmask});
            }
        }
        return found_;
    }

private:
    size_t state(int v, uint32_t mask) const
    {
        return (static_cast<size_t>(v) << c_.k) | mask;
    }

    const Graph& g_;
    const EdgeColouring& c_;
    std::vector<bool> seen_;
    std::vector<bool> found_;
    std::vector<std::pair<int, uint32_t>> queue_;
};

inline void check_verify_inputs(const Graph& g, const EdgeColouring& c, int mask_budget)
{
    if (c.k > mask_budget)
        throw capacity_error("verify: " + std::to_string(c.k) + " colours exceed mask budget "
                             + std::to_string(mask_budget));
    check_total(g, c);
}

}  // namespace detail

inline bool has_rainbow_path(const Graph& g, const EdgeColouring& c, int u, int v,
                             int mask_budget = kDefaultMaskBudget)
{
    detail::check_verify_inputs(g, c, mask_budget);
    if (u == v)
        return true;
    detail::MaskSearch search(g, c);
    return search.run(u, 0, v)[v];
}

/// Shortest rainbow path from u to v, ties broken by lexicographically
/// smallest vertex sequence. Returns the vertex sequence, or nothing.
inline std::optional<std::vector<int>> rainbow_path(const Graph& g, const EdgeColouring& c,
                                                    int u, int v,
                                                    int mask_budget = kDefaultMaskBudget)
{
    detail::check_verify_inputs(g, c, mask_budget);
    if (u == v)
        return std::vector<int>{u};

    // Pass 1: minimal rainbow-path length via BFS over (vertex, mask).
    std::vector<bool> seen(static_cast<size_t>(g.vertex_count()) << c.k, false);
    std::vector<std::pair<int, uint32_t>> queue{{u, 0}};
    std::vector<int> depth{0};
    seen[(static_cast<size_t>(u) << c.k)] = true;
    int best_len = -1;
    for (size_t head = 0; head < queue.size() && best_len < 0; ++head) {
        auto [x, mask] = queue[head];
        for (int w : g.neighbours(x)) {
            int col = c.colour[g.edge_index(x, w)];
            if (mask & (1u << col))
                continue;
            uint32_t nmask = mask | (1u << col);
            size_t s = (static_cast<size_t>(w) << c.k) | nmask;
            if (seen[s])
                continue;
            seen[s] = true;
            if (w == v) {
                best_len = depth[head] + 1;
                break;
            }
            queue.push_back({w, nmask});
            depth.push_back(depth[head] + 1);
        }
    }
    if (best_len < 0)
        return std::nullopt;

    // Pass 2: lexicographically smallest simple rainbow path of that length,
    // by DFS in ascending neighbour order with a plain-distance prune.
    auto dist_to_v = bfs_distances(g, v);
    std::vector<int> path{u};
    std::vector<bool> on_path(g.vertex_count(), false);
    on_path[u] = true;
    uint32_t used = 0;
    std::vector<int> result;

    auto dfs = [&](auto&& self, int x, int remaining) -> bool {
        if (x == v && remaining == 0) {
            result = path;
            return true;
        }
        if (remaining == 0 || dist_to_v[x] > remaining)
            return false;
        for (int w : g.neighbours(x)) {
            if (on_path[w])
                continue;
            int col = c.colour[g.edge_index(x, w)];
            if (used & (1u << col))
                continue;
            path.push_back(w);
            on_path[w] = true;
            used |= (1u << col);
            if (self(self, w, remaining - 1))
                return true;
            used &= ~(1u << col);
            on_path[w] = false;
            path.pop_back();
        }
        return false;
    };
    dfs(dfs, u, best_len);
    return result;
}

/// Checks whether the colouring makes g rainbow connected. When it does not,
/// reports a concrete failing pair. With `with_witnesses`, additionally
/// records one witness path per vertex pair.
inline RainbowReport verify_rainbow(const Graph& g, const EdgeColouring& c,
                                    bool with_witnesses = false,
                                    int mask_budget = kDefaultMaskBudget)
{
    detail::check_verify_inputs(g, c, mask_budget);
    RainbowReport report;
    int n = g.vertex_count();
    detail::MaskSearch search(g, c);
    for (int u = 0; u + 1 < n; ++u) {
        const auto& found = search.run(u, u + 1);
        for (int v = u + 1; v < n; ++v)
            if (!found[v]) {
                report.connected = false;
                report.failing_pair = Edge{u, v};
                return report;
            }
    }
    report.connected = true;
    if (with_witnesses)
        for (int u = 0; u + 1 < n; ++u)
            for (int v = u + 1; v < n; ++v)
                report.witness_paths.push_back({{u, v}, *rainbow_path(g, c, u, v, mask_budget)});
    return report;
}

/// Line-oriented report: "u v : path vertices : path colours" per pair,
/// or the failing pair.
inline void write_report(std::ostream& out, const Graph& g, const EdgeColouring& c,
                         const RainbowReport& report)
{
    if (!report.connected) {
        out << "not rainbow connected\n";
        if (report.failing_pair)
            out << "failing pair: " << report.failing_pair->first << ' '
                << report.failing_pair->second << '\n';
        return;
    }
    out << "rainbow connected\n";
    for (const auto& [pair, path] : report.witness_paths) {
        out << pair.first << ' ' << pair.second << " :";
        for (int v : path)
            out << ' ' << v;
        out << " :";
        for (size_t i = 0; i + 1 < path.size(); ++i)
            out << ' ' << c.colour[g.edge_index(path[i], path[i + 1])];
        out << '\n';
    }
}

}  // namespace rainbow
