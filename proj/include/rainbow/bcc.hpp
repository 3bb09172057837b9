#pragma once

#include <map>
#include <optional>
#include <set>

#include "rainbow/graph.hpp"
#include "rainbow/separation.hpp"

namespace rainbow {

inline constexpr long long kDefaultBccBudget = 10'000'000;

/// Biclique-cover-by-bipartitioning instance: a base graph and an ordered
/// family of vertex subsets.
struct BccInstance {
    Graph base;
    std::vector<std::vector<int>> family;  // each set sorted ascending
};

/// A candidate bipartitioning function: x_of[t] is X(T_t), a proper subset
/// of the t-th family set. Y(T) is implicitly T minus X(T).
struct Bipartitioning {
    std::vector<std::vector<int>> x_of;
};

struct BccCheck {
    bool covered = false;
    std::vector<Edge> uncovered;
};

namespace detail {

inline void check_proper(const BccInstance& inst, const Bipartitioning& x)
{
    if (x.x_of.size() != inst.family.size())
        throw std::invalid_argument("bipartitioning: wrong number of sets");
    for (size_t t = 0; t < inst.family.size(); ++t) {
        const auto& set = inst.family[t];
        if (x.x_of[t].size() >= set.size() && !set.empty())
            throw std::invalid_argument("bipartitioning: X(T) must be a proper subset");
        for (int v : x.x_of[t])
            if (!std::binary_search(set.begin(), set.end(), v))
                throw std::invalid_argument("bipartitioning: X(T) not contained in T");
    }
}

}  // namespace detail

/// Checks whether the bicliques (X(T), T \ X(T)) cover every edge of the
/// base graph; reports the uncovered edges.
inline BccCheck verify_bipartition(const BccInstance& inst, const Bipartitioning& x)
{
    detail::check_proper(inst, x);
    BccCheck out;
    for (auto [u, v] : inst.base.edges()) {
        bool covered = false;
        for (size_t t = 0; t < inst.family.size() && !covered; ++t) {
            const auto& set = inst.family[t];
            if (!std::binary_search(set.begin(), set.end(), u)
                || !std::binary_search(set.begin(), set.end(), v))
                continue;
            const auto& xs = x.x_of[t];
            bool xu = std::find(xs.begin(), xs.end(), u) != xs.end();
            bool xv = std::find(xs.begin(), xs.end(), v) != xs.end();
            covered = xu != xv;
        }
        if (!covered)
            out.uncovered.push_back({u, v});
    }
    out.covered = out.uncovered.empty();
    return out;
}

/// Edges whose endpoints co-occur in exactly one family set, mapped to that
/// set; edges whose endpoints co-occur in none are definitely uncoverable.
struct UniqueCoverage {
    std::vector<std::pair<Edge, int>> unique_edges;  // edge -> family index
    std::vector<Edge> uncoverable;
};

inline UniqueCoverage uniquely_coverable(const BccInstance& inst)
{
    UniqueCoverage out;
    for (auto [u, v] : inst.base.edges()) {
        int count = 0, where = -1;
        for (size_t t = 0; t < inst.family.size(); ++t) {
            const auto& set = inst.family[t];
            if (std::binary_search(set.begin(), set.end(), u)
                && std::binary_search(set.begin(), set.end(), v)) {
                ++count;
                where = static_cast<int>(t);
            }
        }
        if (count == 0)
            out.uncoverable.push_back({u, v});
        else if (count == 1)
            out.unique_edges.push_back({{u, v}, where});
    }
    return out;
}

/// Backtracking solver. One side variable per set member; the first member
/// of each usable set is normalized into X. A uniquely coverable edge
/// forces its set to separate the endpoints, maintained as a parity
/// constraint in a union-find; so is every edge whose other candidate sets
/// have been refuted. Search branches only on side assignments that are
/// still undetermined. The node budget turns runaway instances into a
/// capacity error, never a wrong answer.
inline std::optional<Bipartitioning> solve_bcc(const BccInstance& inst,
                                               long long budget = kDefaultBccBudget)
{
    int s = static_cast<int>(inst.family.size());
    std::vector<int> offset(s + 1, 0);
    for (int t = 0; t < s; ++t)
        offset[t + 1] = offset[t] + static_cast<int>(inst.family[t].size());
    int vars = offset[s];
    const int kZero = vars;      // virtual node pinned to value 0
    const int kOne = vars + 1;   // virtual node pinned to value 1

    detail::ParityDsu dsu(vars + 2);
    dsu.merge(kZero, kOne, 1);
    for (int t = 0; t < s; ++t) {
        if (inst.family[t].size() == 1)
            dsu.merge(offset[t], kZero, 0);  // X of a singleton can only be empty
        else if (inst.family[t].size() >= 2)
            dsu.merge(offset[t], kOne, 0);   // anchor the first member into X
    }

    // Constraints, all of the shape "some listed pair takes different
    // values": per base edge, a witness per candidate covering set; per
    // usable set, a witness per non-anchor member against the all-ones
    // node, which forbids X(T) = T.
    std::vector<std::vector<std::pair<int, int>>> constraints;
    for (auto [u, v] : inst.base.edges()) {
        std::vector<std::pair<int, int>> witnesses;
        for (int t = 0; t < s; ++t) {
            const auto& set = inst.family[t];
            auto iu = std::lower_bound(set.begin(), set.end(), u);
            auto iv = std::lower_bound(set.begin(), set.end(), v);
            if (iu == set.end() || *iu != u || iv == set.end() || *iv != v)
                continue;
            witnesses.push_back({offset[t] + static_cast<int>(iu - set.begin()),
                                 offset[t] + static_cast<int>(iv - set.begin())});
        }
        if (witnesses.empty())
            return std::nullopt;  // no family set contains both endpoints
        constraints.push_back(std::move(witnesses));
    }
    for (int t = 0; t < s; ++t) {
        if (inst.family[t].size() < 2)
            continue;
        std::vector<std::pair<int, int>> witnesses;
        for (size_t j = 1; j < inst.family[t].size(); ++j)
            witnesses.push_back({offset[t] + static_cast<int>(j), kOne});
        constraints.push_back(std::move(witnesses));
    }

    auto propagate = [&]() -> bool {
        bool again = true;
        while (again) {
            again = false;
            for (const auto& witnesses : constraints) {
                bool satisfied = false;
                int live = 0;
                std::pair<int, int> unit{-1, -1};
                for (auto [a, b] : witnesses) {
                    int rel = dsu.relation(a, b);
                    if (rel == 1) {
                        satisfied = true;
                        break;
                    }
                    if (rel == -1) {
                        ++live;
                        unit = {a, b};
                    }
                }
                if (satisfied)
                    continue;
                if (live == 0)
                    return false;
                if (live == 1) {
                    if (!dsu.merge(unit.first, unit.second, 1))
                        return false;
                    again = true;
                }
            }
        }
        return true;
    };

    long long nodes = 0;
    auto search = [&](auto&& self) -> bool {
        if (++nodes > budget)
            throw capacity_error("solve_bcc: search budget exhausted");
        if (!propagate())
            return false;
        int branch = -1;
        for (int v = 0; v < vars && branch < 0; ++v)
            if (dsu.find(v).first != dsu.find(kZero).first)
                branch = v;
        if (branch < 0)
            return true;  // fully determined and every constraint satisfied
        for (int value : {1, 0}) {
            size_t mark = dsu.mark();
            if (dsu.merge(branch, kZero, value) && self(self))
                return true;
            dsu.rollback(mark);
        }
        return false;
    };

    if (!search(search))
        return std::nullopt;
    Bipartitioning x;
    x.x_of.resize(s);
    auto [zr, zp] = dsu.find(kZero);
    for (int t = 0; t < s; ++t)
        for (size_t j = 0; j < inst.family[t].size(); ++j) {
            auto [r, p] = dsu.find(offset[t] + static_cast<int>(j));
            if (r == zr && (p ^ zp) == 1)
                x.x_of[t].push_back(inst.family[t][j]);
        }
    return x;
}

/// BCC instance text format: the base graph in edge-list format followed by
/// one "set v1 v2 ..." line per family set.
inline BccInstance parse_bcc(std::istream& in)
{
    std::string raw, line;
    int lineno = 0;
    int n = -1, m = -1, read_edges = 0;
    std::vector<Edge> edges;
    BccInstance inst;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!detail::content_line(raw, line))
            continue;
        std::istringstream iss(line);
        if (n < 0) {
            if (!(iss >> n >> m) || n < 0 || m < 0)
                throw parse_error("line " + std::to_string(lineno) + ": expected header 'n m'");
            continue;
        }
        std::string head;
        iss >> head;
        if (head == "set") {
            std::vector<int> set;
            int v;
            while (iss >> v) {
                if (v < 0 || v >= n)
                    throw parse_error("line " + std::to_string(lineno)
                                      + ": set member out of range");
                set.push_back(v);
            }
            std::sort(set.begin(), set.end());
            set.erase(std::unique(set.begin(), set.end()), set.end());
            inst.family.push_back(std::move(set));
        } else {
            if (read_edges >= m)
                throw parse_error("line " + std::to_string(lineno)
                                  + ": expected 'set ...' after " + std::to_string(m) + " edges");
            int u = 0, v = 0;
            std::istringstream edge_line(line);
            if (!(edge_line >> u >> v))
                throw parse_error("line " + std::to_string(lineno) + ": expected edge 'u v'");
            edges.push_back({u, v});
            ++read_edges;
        }
    }
    if (n < 0)
        throw parse_error("missing 'n m' header");
    if (read_edges != m)
        throw parse_error("declared " + std::to_string(m) + " edges but found "
                          + std::to_string(read_edges));
    try {
        inst.base = Graph::from_edges(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
    return inst;
}

inline void write_bcc(std::ostream& out, const BccInstance& inst)
{
    write_graph(out, inst.base);
    for (const auto& set : inst.family) {
        out << "set";
        for (int v : set)
            out << ' ' << v;
        out << '\n';
    }
}

/// Bipartitioning text format: one "X <set-index> v1 v2 ..." line per set.
inline Bipartitioning parse_bipartitioning(std::istream& in, const BccInstance& inst)
{
    Bipartitioning x;
    x.x_of.resize(inst.family.size());
    std::vector<bool> seen(inst.family.size(), false);
    std::string raw, line;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!detail::content_line(raw, line))
            continue;
        std::istringstream iss(line);
        std::string head;
        int t;
        if (!(iss >> head >> t) || head != "X" || t < 0
            || t >= static_cast<int>(inst.family.size()))
            throw parse_error("line " + std::to_string(lineno)
                              + ": expected 'X <set-index> v1 v2 ...'");
        if (seen[t])
            throw parse_error("line " + std::to_string(lineno) + ": duplicate set index");
        seen[t] = true;
        int v;
        while (iss >> v)
            x.x_of[t].push_back(v);
        std::sort(x.x_of[t].begin(), x.x_of[t].end());
    }
    for (size_t t = 0; t < seen.size(); ++t)
        if (!seen[t])
            throw parse_error("missing X line for set " + std::to_string(t));
    return x;
}

inline void write_bipartitioning(std::ostream& out, const Bipartitioning& x)
{
    for (size_t t = 0; t < x.x_of.size(); ++t) {
        out << "X " << t;
        for (int v : x.x_of[t])
            out << ' ' << v;
        out << '\n';
    }
}

}  // namespace rainbow
