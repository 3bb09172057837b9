#pragma once

#include "rainbow/reduction.hpp"
#include "rainbow/separation.hpp"
#include "rainbow/split.hpp"

namespace rainbow {

/// Bipartite graph with parts A and B; only B-B rainbow connectivity is
/// ever asked of it.
struct BipartiteInstance {
    int n_a = 0, n_b = 0;
    std::vector<std::pair<int, int>> edges;  // (a index, b index)
};

/// Drops the clique twins u'_v and all clique edges of G', keeping the
/// bipartite core: A'' = {s_T} + {x_e} against B' = {u_v}.
inline BipartiteInstance rc2_core_to_bipartite(const Graph& gprime,
                                               const Rc2GadgetLabels& labels)
{
    BipartiteInstance h;
    h.n_a = static_cast<int>(labels.s.size() + labels.x.size());
    h.n_b = labels.base_n;
    for (size_t t = 0; t < labels.s.size(); ++t) {
        if (labels.s[t] < 0 || labels.s[t] >= gprime.vertex_count())
            throw std::invalid_argument("rc2_core_to_bipartite: labels disagree with graph");
        for (int b = 0; b < labels.base_n; ++b)
            if (gprime.adjacent(labels.u[b], labels.s[t]))
                h.edges.push_back({static_cast<int>(t), b});
    }
    for (size_t i = 0; i < labels.x.size(); ++i) {
        auto [e, xe] = labels.x[i];
        if (xe < 0 || xe >= gprime.vertex_count() || !gprime.adjacent(labels.u[e.first], xe)
            || !gprime.adjacent(labels.u[e.second], xe))
            throw std::invalid_argument("rc2_core_to_bipartite: labels disagree with graph");
        int a_idx = static_cast<int>(labels.s.size() + i);
        h.edges.push_back({a_idx, e.first});
        h.edges.push_back({a_idx, e.second});
    }
    std::sort(h.edges.begin(), h.edges.end());
    h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
    return h;
}

/// Two-colours the cross edges so that every B pair is joined by a rainbow
/// two-edge path, i.e. shares an A neighbour with unequally coloured
/// edges. Same engine as the 2-colour rainbow solver. Returns colours per
/// edge index, or nothing.
inline std::optional<std::vector<int>> decide_bipartite_rainbow(const BipartiteInstance& h)
{
    SeparationProblem problem;
    problem.var_count = static_cast<int>(h.edges.size());
    std::vector<std::vector<std::pair<int, int>>> by_a(h.n_a);
    for (size_t i = 0; i < h.edges.size(); ++i)
        by_a[h.edges[i].first].push_back({h.edges[i].second, static_cast<int>(i)});
    for (int u = 0; u < h.n_b; ++u)
        for (int v = u + 1; v < h.n_b; ++v) {
            std::vector<std::pair<int, int>> witnesses;
            for (const auto& star : by_a) {
                int eu = -1, ev = -1;
                for (auto [b, idx] : star) {
                    if (b == u)
                        eu = idx;
                    if (b == v)
                        ev = idx;
                }
                if (eu >= 0 && ev >= 0)
                    witnesses.push_back({eu, ev});
            }
            if (witnesses.empty())
                return std::nullopt;  // no common A neighbour
            problem.pairs.push_back(std::move(witnesses));
        }
    return solve_separation(problem);
}

/// Matrix view: rows are B vertices, columns are A vertices, and the
/// adversarially changeable locations C are the missing cross pairs.
struct MatrixInstance {
    int rows = 0, cols = 0;
    std::vector<std::pair<int, int>> free_locations;  // C, sorted
};

inline MatrixInstance bipartite_to_matrix(const BipartiteInstance& h)
{
    MatrixInstance inst;
    inst.rows = h.n_b;
    inst.cols = h.n_a;
    std::vector<std::vector<bool>> present(h.n_b, std::vector<bool>(h.n_a, false));
    for (auto [a, b] : h.edges)
        present[b][a] = true;
    for (int r = 0; r < h.n_b; ++r)
        for (int c = 0; c < h.n_a; ++c)
            if (!present[r][c])
                inst.free_locations.push_back({r, c});
    return inst;
}

/// True iff every row pair differs in some column where both entries lie
/// outside C; entries at C are adversary-owned and never distinguish.
inline bool verify_matrix(const MatrixInstance& inst,
                          const std::vector<std::vector<int>>& entries)
{
    if (static_cast<int>(entries.size()) != inst.rows)
        throw std::invalid_argument("verify_matrix: wrong row count");
    for (const auto& row : entries)
        if (static_cast<int>(row.size()) != inst.cols)
            throw std::invalid_argument("verify_matrix: wrong column count");
    std::vector<std::vector<bool>> free_cell(inst.rows, std::vector<bool>(inst.cols, false));
    for (auto [r, c] : inst.free_locations)
        free_cell[r][c] = true;
    for (int r1 = 0; r1 < inst.rows; ++r1)
        for (int r2 = r1 + 1; r2 < inst.rows; ++r2) {
            bool distinct = false;
            for (int c = 0; c < inst.cols && !distinct; ++c)
                distinct = !free_cell[r1][c] && !free_cell[r2][c]
                           && entries[r1][c] != entries[r2][c];
            if (!distinct)
                return false;
        }
    return true;
}

/// Fixed entries from an edge colouring (red 0, blue 1); cells in C get 0.
inline std::vector<std::vector<int>> colouring_to_matrix(const BipartiteInstance& h,
                                                         const std::vector<int>& col)
{
    std::vector<std::vector<int>> entries(h.n_b, std::vector<int>(h.n_a, 0));
    for (size_t i = 0; i < h.edges.size(); ++i)
        entries[h.edges[i].second][h.edges[i].first] = col[i];
    return entries;
}

/// Packing view: one box per B vertex, side 1/2 in dimension i when the
/// vertex sees a_i and 1 otherwise. All lengths are kept in half-units so
/// the decision never touches floating point.
struct PackingInstance {
    int dimension = 0;
    std::vector<std::vector<int>> sides_in_halves;  // entries 1 or 2
};

inline PackingInstance bipartite_to_packing(const BipartiteInstance& h)
{
    PackingInstance inst;
    inst.dimension = h.n_a;
    inst.sides_in_halves.assign(h.n_b, std::vector<int>(h.n_a, 2));
    for (auto [a, b] : h.edges)
        inst.sides_in_halves[b][a] = 1;
    return inst;
}

/// Box corners from an edge colouring: offset 1/2 exactly on red edges.
inline std::vector<std::vector<int>> colouring_to_packing(const BipartiteInstance& h,
                                                          const std::vector<int>& col)
{
    std::vector<std::vector<int>> corners(h.n_b, std::vector<int>(h.n_a, 0));
    for (size_t i = 0; i < h.edges.size(); ++i)
        if (col[i] == kRed)
            corners[h.edges[i].second][h.edges[i].first] = 1;
    return corners;
}

struct PackingCheck {
    bool ok = false;
    std::string diagnostic;
};

/// Every box inside the unit cube and every pair separated in some
/// dimension, in exact half-unit arithmetic.
inline PackingCheck verify_packing(const PackingInstance& inst,
                                   const std::vector<std::vector<int>>& corners)
{
    if (corners.size() != inst.sides_in_halves.size())
        throw std::invalid_argument("verify_packing: wrong box count");
    int m = static_cast<int>(corners.size());
    for (int b = 0; b < m; ++b) {
        if (static_cast<int>(corners[b].size()) != inst.dimension)
            throw std::invalid_argument("verify_packing: wrong dimension");
        for (int d = 0; d < inst.dimension; ++d) {
            int lo = corners[b][d], hi = lo + inst.sides_in_halves[b][d];
            if (lo < 0 || hi > 2)
                return {false, "box " + std::to_string(b) + " leaves the cube in dimension "
                                   + std::to_string(d)};
        }
    }
    for (int b1 = 0; b1 < m; ++b1)
        for (int b2 = b1 + 1; b2 < m; ++b2) {
            bool separated = false;
            for (int d = 0; d < inst.dimension && !separated; ++d) {
                int lo1 = corners[b1][d], hi1 = lo1 + inst.sides_in_halves[b1][d];
                int lo2 = corners[b2][d], hi2 = lo2 + inst.sides_in_halves[b2][d];
                separated = hi1 <= lo2 || hi2 <= lo1;
            }
            if (!separated)
                return {false, "boxes " + std::to_string(b1) + " and " + std::to_string(b2)
                                   + " overlap"};
        }
    return {true, ""};
}

/// The threshold-graph test: 2-colourable exactly when the degrees over a
/// maximum independent set satisfy sum 2^(-d(v)) <= 1. The maximum
/// independent set is the independent side plus, when that enlarges it,
/// the clique vertex with no independent neighbour. Exact dyadic
/// arithmetic throughout.
inline bool threshold_kraft(const Graph& g)
{
    if (!is_connected(g) || !is_threshold(g))
        throw std::invalid_argument("threshold_kraft: input must be a connected threshold graph");
    auto sp = recognize_split(g);
    std::vector<int> mis = sp->independent;
    for (int v : sp->clique) {
        bool sees_independent = false;
        for (int w : g.neighbours(v))
            if (std::find(sp->independent.begin(), sp->independent.end(), w)
                != sp->independent.end()) {
                sees_independent = true;
                break;
            }
        if (!sees_independent) {
            mis.push_back(v);
            break;  // two such clique vertices would be adjacent
        }
    }
    if (mis.empty())
        return true;  // single-vertex graph
    int max_deg = 0;
    for (int v : mis)
        max_deg = std::max(max_deg, g.degree(v));
    if (max_deg > 120)
        throw capacity_error("threshold_kraft: degrees exceed exact dyadic range");
    // sum 2^(-d) <= 1 over a common denominator 2^max_deg
    unsigned __int128 numerator = 0;
    unsigned __int128 one = static_cast<unsigned __int128>(1) << max_deg;
    for (int v : mis)
        numerator += static_cast<unsigned __int128>(1) << (max_deg - g.degree(v));
    return numerator <= one;
}

/// Matrix instance file: header "m n", then one "i j" line per location in C.
inline MatrixInstance parse_matrix_instance(std::istream& in)
{
    MatrixInstance inst;
    std::string raw, line;
    int lineno = 0;
    bool have_header = false;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!detail::content_line(raw, line))
            continue;
        std::istringstream iss(line);
        if (!have_header) {
            if (!(iss >> inst.rows >> inst.cols) || inst.rows < 0 || inst.cols < 0)
                throw parse_error("line " + std::to_string(lineno) + ": expected header 'm n'");
            have_header = true;
        } else {
            int r, c;
            if (!(iss >> r >> c) || r < 0 || r >= inst.rows || c < 0 || c >= inst.cols)
                throw parse_error("line " + std::to_string(lineno) + ": bad location");
            inst.free_locations.push_back({r, c});
        }
    }
    if (!have_header)
        throw parse_error("missing 'm n' header");
    std::sort(inst.free_locations.begin(), inst.free_locations.end());
    return inst;
}

inline void write_matrix_instance(std::ostream& out, const MatrixInstance& inst)
{
    out << inst.rows << ' ' << inst.cols << '\n';
    for (auto [r, c] : inst.free_locations)
        out << r << ' ' << c << '\n';
}

/// Packing file: header "n", then one side vector per box as "1"/"0.5"
/// tokens. Placement files use the same shape with "0"/"0.5" offsets.
inline PackingInstance parse_packing_instance(std::istream& in)
{
    PackingInstance inst;
    std::string raw, line;
    int lineno = 0;
    bool have_header = false;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!detail::content_line(raw, line))
            continue;
        std::istringstream iss(line);
        if (!have_header) {
            if (!(iss >> inst.dimension) || inst.dimension < 0)
                throw parse_error("line " + std::to_string(lineno) + ": expected header 'n'");
            have_header = true;
            continue;
        }
        std::vector<int> sides;
        std::string tok;
        while (iss >> tok) {
            if (tok == "1")
                sides.push_back(2);
            else if (tok == "0.5")
                sides.push_back(1);
            else
                throw parse_error("line " + std::to_string(lineno)
                                  + ": sides must be 1 or 0.5");
        }
        if (static_cast<int>(sides.size()) != inst.dimension)
            throw parse_error("line " + std::to_string(lineno) + ": wrong dimension");
        inst.sides_in_halves.push_back(std::move(sides));
    }
    if (!have_header)
        throw parse_error("missing 'n' header");
    return inst;
}

inline void write_packing_instance(std::ostream& out, const PackingInstance& inst)
{
    out << inst.dimension << '\n';
    for (const auto& box : inst.sides_in_halves) {
        for (size_t d = 0; d < box.size(); ++d)
            out << (box[d] == 2 ? "1" : "0.5") << (d + 1 < box.size() ? " " : "");
        out << '\n';
    }
}

inline void write_placements(std::ostream& out, const std::vector<std::vector<int>>& corners)
{
    for (const auto& box : corners) {
        for (size_t d = 0; d < box.size(); ++d)
            out << (box[d] == 0 ? "0" : "0.5") << (d + 1 < box.size() ? " " : "");
        out << '\n';
    }
}

}  // namespace rainbow
