#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

/// Malformed input file; message carries a line number where possible.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An instance exceeds a configured limit of an exponential-time routine.
/// Deliberately distinct from a "no" answer.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v)
{
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Simple undirected graph on dense vertex ids 0..n-1.
/// Immutable after construction; edges are kept sorted so edge indices
/// are stable and deterministic.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, std::vector<Edge> edges)
    {
        if (n < 0)
            throw std::invalid_argument("graph: negative vertex count");
        for (auto& e : edges) {
            if (e.first == e.second)
                throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(e.first));
            if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n)
                throw std::invalid_argument("graph: edge endpoint out of range");
            e = make_edge(e.first, e.second);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("graph: parallel edge");
        Graph g;
        g.n_ = n;
        g.edges_ = std::move(edges);
        g.adj_.assign(n, {});
        for (auto [u, v] : g.edges_) {
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& nb : g.adj_)
            std::sort(nb.begin(), nb.end());
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool adjacent(int u, int v) const
    {
        if (u == v)
            return false;
        const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
        int other = (&nb == &adj_[u]) ? v : u;
        return std::binary_search(nb.begin(), nb.end(), other);
    }

    /// Index of an edge in the sorted edge list, or -1 when absent.
    int edge_index(int u, int v) const
    {
        Edge e = make_edge(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e)
            return -1;
        return static_cast<int>(it - edges_.begin());
    }

    bool operator==(const Graph& other) const
    {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

inline std::vector<int> bfs_distances(const Graph& g, int src)
{
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbours(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

inline bool is_connected(const Graph& g)
{
    if (g.vertex_count() <= 1)
        return true;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

inline int distance(const Graph& g, int u, int v)
{
    auto dist = bfs_distances(g, u);
    if (dist[v] < 0)
        throw std::invalid_argument("distance: vertices not connected");
    return dist[v];
}

inline int diameter(const Graph& g)
{
    if (g.vertex_count() == 0)
        throw std::invalid_argument("diameter: empty graph");
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int d : dist) {
            if (d < 0)
                throw std::invalid_argument("diameter: disconnected graph");
            best = std::max(best, d);
        }
    }
    return best;
}

/// Degree-1 vertices.
inline std::vector<int> pendant_set(const Graph& g)
{
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1)
            out.push_back(v);
    return out;
}

/// Bridges by an iterative low-link DFS. Works on disconnected graphs.
inline std::vector<Edge> bridges(const Graph& g)
{
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), iter(n, 0);
    std::vector<Edge> out;
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0)
            continue;
        std::vector<int> stack{root};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            int v = stack.back();
            if (iter[v] < g.degree(v)) {
                int w = g.neighbours(v)[iter[v]++];
                if (disc[w] < 0) {
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    stack.push_back(w);
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (parent[v] >= 0) {
                    low[parent[v]] = std::min(low[parent[v]], low[v]);
                    if (low[v] > disc[parent[v]])
                        out.push_back(make_edge(parent[v], v));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_complete(const Graph& g)
{
    long long n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

inline bool is_tree(const Graph& g)
{
    return is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

/// Induced subgraph together with both directions of the vertex relabelling.
/// New ids follow the ascending order of the kept old ids.
struct Induced {
    Graph graph;
    std::vector<int> to_old;  // new id -> old id
    std::vector<int> to_new;  // old id -> new id, -1 when dropped
};

inline Induced induced_subgraph(const Graph& g, const std::vector<bool>& keep)
{
    Induced ind;
    ind.to_new.assign(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (keep[v]) {
            ind.to_new[v] = static_cast<int>(ind.to_old.size());
            ind.to_old.push_back(v);
        }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (keep[u] && keep[v])
            edges.push_back(make_edge(ind.to_new[u], ind.to_new[v]));
    ind.graph = Graph::from_edges(static_cast<int>(ind.to_old.size()), std::move(edges));
    return ind;
}

namespace detail {

// Strips a '#' comment and surrounding whitespace; returns false for blank lines.
inline bool content_line(const std::string& raw, std::string& out)
{
    auto hash = raw.find('#');
    out = raw.substr(0, hash);
    auto from = out.find_first_not_of(" \t\r\n");
    if (from == std::string::npos)
        return false;
    auto to = out.find_last_not_of(" \t\r\n");
    out = out.substr(from, to - from + 1);
    return true;
}

}  // namespace detail

/// Edge-list text format: first line "n m", then one "u v" per edge,
/// 0-indexed. '#' starts a comment anywhere on a line.
inline Graph parse_graph(std::istream& in)
{
    std::string raw, line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!detail::content_line(raw, line))
            continue;
        std::istringstream iss(line);
        if (n < 0) {
            if (!(iss >> n >> m) || n < 0 || m < 0)
                throw parse_error("line " + std::to_string(lineno) + ": expected header 'n m'");
        } else {
            int u, v;
            if (!(iss >> u >> v))
                throw parse_error("line " + std::to_string(lineno) + ": expected edge 'u v'");
            std::string rest;
            if (iss >> rest)
                throw parse_error("line " + std::to_string(lineno) + ": trailing tokens after edge");
            edges.emplace_back(u, v);
        }
    }
    if (n < 0)
        throw parse_error("missing 'n m' header");
    if (static_cast<int>(edges.size()) != m)
        throw parse_error("declared " + std::to_string(m) + " edges but found "
                          + std::to_string(edges.size()));
    try {
        return Graph::from_edges(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

inline void write_graph(std::ostream& out, const Graph& g)
{
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

}  // namespace rainbow
