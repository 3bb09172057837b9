#pragma once

#include "rainbow/bcc.hpp"
#include "rainbow/colouring.hpp"
#include "rainbow/sat.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

/// Vertex ids and family indices of the formula-to-BCC gadget, so
/// certificates stay portable across runs.
struct SatGadgetLabels {
    struct VarGadget {
        int a, f, f1, f2, t, t1, t2;
    };
    struct ClauseGadget {
        int A, F;
    };
    std::vector<VarGadget> vars;
    std::vector<ClauseGadget> clauses;
    std::vector<std::array<int, 2>> v_sets;  // family indices of V_i^1, V_i^2
    std::vector<std::array<int, 3>> c_sets;  // family indices of C_j^1..3
};

struct SatReduction {
    BccInstance instance;
    SatGadgetLabels labels;
};

/// Formula to BCC gadget. Seven vertices and eight edges per variable, two
/// vertices and ten edges per clause; the family holds one positive and one
/// negative set per variable plus three triples per clause, so
/// |V| = 7n + 2m, |E| = 8n + 10m, |S| = 2n + 3m.
inline SatReduction sat_to_bcc(const CnfFormula& formula)
{
    int n = formula.variables;
    int m = static_cast<int>(formula.clauses.size());
    SatReduction red;
    auto& labels = red.labels;
    for (int i = 0; i < n; ++i)
        labels.vars.push_back({7 * i, 7 * i + 1, 7 * i + 2, 7 * i + 3,
                               7 * i + 4, 7 * i + 5, 7 * i + 6});
    for (int j = 0; j < m; ++j)
        labels.clauses.push_back({7 * n + 2 * j, 7 * n + 2 * j + 1});

    std::vector<Edge> edges;
    for (const auto& g : labels.vars) {
        edges.push_back({g.a, g.f});
        edges.push_back({g.a, g.t});
        edges.push_back({g.f, g.t1});
        edges.push_back({g.f, g.t2});
        edges.push_back({g.t, g.f1});
        edges.push_back({g.t, g.f2});
        edges.push_back({g.f1, g.t1});
        edges.push_back({g.f2, g.t2});
    }
    for (int j = 0; j < m; ++j) {
        const auto& cg = labels.clauses[j];
        edges.push_back({cg.A, cg.F});
        for (int lit : formula.clauses[j]) {
            const auto& vg = labels.vars[std::abs(lit) - 1];
            edges.push_back({cg.A, vg.a});
            edges.push_back({cg.A, vg.t});
            edges.push_back({cg.F, vg.t});
        }
    }
    red.instance.base = Graph::from_edges(7 * n + 2 * m, std::move(edges));

    auto& family = red.instance.family;
    for (int i = 0; i < n; ++i) {
        const auto& vg = labels.vars[i];
        std::vector<int> pos{vg.a, vg.f, vg.f1, vg.t, vg.t1};
        std::vector<int> neg{vg.a, vg.f, vg.f2, vg.t, vg.t2};
        for (int j = 0; j < m; ++j)
            for (int lit : formula.clauses[j]) {
                if (lit == i + 1)
                    pos.push_back(labels.clauses[j].A);
                if (lit == -(i + 1))
                    neg.push_back(labels.clauses[j].A);
            }
        std::sort(pos.begin(), pos.end());
        std::sort(neg.begin(), neg.end());
        labels.v_sets.push_back({static_cast<int>(family.size()),
                                 static_cast<int>(family.size()) + 1});
        family.push_back(std::move(pos));
        family.push_back(std::move(neg));
    }
    for (int j = 0; j < m; ++j) {
        std::array<int, 3> idx{};
        for (int k = 0; k < 3; ++k) {
            const auto& vg = labels.vars[std::abs(formula.clauses[j][k]) - 1];
            std::vector<int> set{vg.t, labels.clauses[j].A, labels.clauses[j].F};
            std::sort(set.begin(), set.end());
            idx[k] = static_cast<int>(family.size());
            family.push_back(std::move(set));
        }
        labels.c_sets.push_back(idx);
    }
    return red;
}

/// Bipartitioning from a satisfying assignment: variable sets split by the
/// variable's value, clause sets by whether the k-th literal is satisfied.
inline Bipartitioning assignment_to_bipartition(const CnfFormula& formula,
                                                const SatGadgetLabels& labels,
                                                const SatAssignment& eval)
{
    int n = formula.variables;
    int m = static_cast<int>(formula.clauses.size());
    Bipartitioning x;
    x.x_of.resize(2 * n + 3 * m);
    for (int i = 0; i < n; ++i) {
        const auto& vg = labels.vars[i];
        std::vector<int> pos, neg;
        if (eval.value[i]) {
            pos = {vg.a, vg.t, vg.t1};
            neg = {vg.a, vg.f, vg.f2};
        } else {
            pos = {vg.a, vg.f, vg.f1};
            neg = {vg.a, vg.t, vg.t2};
        }
        std::sort(pos.begin(), pos.end());
        std::sort(neg.begin(), neg.end());
        x.x_of[labels.v_sets[i][0]] = std::move(pos);
        x.x_of[labels.v_sets[i][1]] = std::move(neg);
    }
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < 3; ++k) {
            int lit = formula.clauses[j][k];
            bool lit_true = eval.value[std::abs(lit) - 1] == (lit > 0);
            const auto& cg = labels.clauses[j];
            std::vector<int> xs;
            if (lit_true)
                xs = {cg.A, labels.vars[std::abs(lit) - 1].t};
            else
                xs = {cg.A, cg.F};
            std::sort(xs.begin(), xs.end());
            x.x_of[labels.c_sets[j][k]] = std::move(xs);
        }
    return x;
}

/// Reads a satisfying assignment back off a covering bipartitioning. First
/// normalizes by per-set complement so that a_i lands in X(V_i^l) and A_j
/// in X(C_j^k), then eval(v_i) = [t_i in X(V_i^1)].
inline SatAssignment bipartition_to_assignment(const BccInstance& inst,
                                               const SatGadgetLabels& labels,
                                               const Bipartitioning& x)
{
    if (!verify_bipartition(inst, x).covered)
        throw std::invalid_argument("bipartition_to_assignment: input does not cover the base");
    auto normalized = [&](int set_idx, int anchor) {
        std::vector<int> xs = x.x_of[set_idx];
        if (std::find(xs.begin(), xs.end(), anchor) == xs.end()) {
            std::vector<int> flip;
            for (int v : inst.family[set_idx])
                if (std::find(xs.begin(), xs.end(), v) == xs.end())
                    flip.push_back(v);
            xs = std::move(flip);
        }
        return xs;
    };
    SatAssignment eval;
    eval.value.resize(labels.vars.size());
    for (size_t i = 0; i < labels.vars.size(); ++i) {
        auto xs = normalized(labels.v_sets[i][0], labels.vars[i].a);
        eval.value[i] = std::find(xs.begin(), xs.end(), labels.vars[i].t) != xs.end();
    }
    return eval;
}

/// Vertex ids of the BCC-to-2-colour-rainbow gadget: one clique twin u'_v
/// and one independent u_v per base vertex, one clique vertex s_T per
/// family set, one clique vertex x_e per base non-edge.
struct Rc2GadgetLabels {
    int base_n = 0;
    std::vector<int> u;                     // u_v, independent side
    std::vector<int> u_prime;               // u'_v
    std::vector<int> s;                     // s_T per family set
    std::vector<std::pair<Edge, int>> x;    // base non-edge -> x_e
};

struct Rc2Reduction {
    Graph graph;
    Rc2GadgetLabels labels;
};

/// Builds the split graph G' whose 2-colour rainbow colourings correspond
/// to covering bipartitionings: the clique A' = {u'_v} + {s_T} + {x_e},
/// the independent side B' = {u_v}, pendant-like edges u_v u'_v, set
/// membership edges, and one shared witness x_e per base non-edge.
inline Rc2Reduction bcc_to_rc2(const BccInstance& inst)
{
    int nv = inst.base.vertex_count();
    int s = static_cast<int>(inst.family.size());
    Rc2Reduction red;
    auto& labels = red.labels;
    labels.base_n = nv;
    for (int v = 0; v < nv; ++v) {
        labels.u.push_back(v);
        labels.u_prime.push_back(nv + v);
    }
    for (int t = 0; t < s; ++t)
        labels.s.push_back(2 * nv + t);
    int next = 2 * nv + s;
    for (int v = 0; v < nv; ++v)
        for (int w = v + 1; w < nv; ++w)
            if (!inst.base.adjacent(v, w))
                labels.x.push_back({{v, w}, next++});

    std::vector<Edge> edges;
    for (int a = nv; a < next; ++a)
        for (int b = a + 1; b < next; ++b)
            edges.push_back({a, b});
    for (int v = 0; v < nv; ++v)
        edges.push_back({labels.u[v], labels.u_prime[v]});
    for (int t = 0; t < s; ++t)
        for (int v : inst.family[t])
            edges.push_back({labels.u[v], labels.s[t]});
    for (const auto& [e, xe] : labels.x) {
        edges.push_back({labels.u[e.first], xe});
        edges.push_back({labels.u[e.second], xe});
    }
    red.graph = Graph::from_edges(next, std::move(edges));
    return red;
}

inline constexpr int kRed = 0;
inline constexpr int kBlue = 1;

/// Colouring of G' from a bipartitioning: clique edges blue, twin edges
/// red, membership edges blue exactly on the X side, and the two edges of
/// each non-edge witness split (lower base vertex red).
inline EdgeColouring bipartition_to_colouring(const BccInstance& inst, const Graph& gprime,
                                              const Rc2GadgetLabels& labels,
                                              const Bipartitioning& x)
{
    detail::check_proper(inst, x);
    EdgeColouring c;
    c.k = 2;
    c.colour.assign(gprime.edge_count(), kBlue);
    for (int v = 0; v < labels.base_n; ++v)
        c.colour[gprime.edge_index(labels.u[v], labels.u_prime[v])] = kRed;
    for (size_t t = 0; t < inst.family.size(); ++t)
        for (int v : inst.family[t]) {
            bool in_x = std::find(x.x_of[t].begin(), x.x_of[t].end(), v) != x.x_of[t].end();
            c.colour[gprime.edge_index(labels.u[v], labels.s[t])] = in_x ? kBlue : kRed;
        }
    for (const auto& [e, xe] : labels.x) {
        c.colour[gprime.edge_index(labels.u[e.first], xe)] = kRed;
        c.colour[gprime.edge_index(labels.u[e.second], xe)] = kBlue;
    }
    return c;
}

/// Reads a covering bipartitioning back off a verified rainbow 2-colouring
/// of G': v goes to X(T) exactly when the membership edge is blue. A set
/// that extracts to all of T is complemented to stay proper.
inline Bipartitioning colouring_to_bipartition(const BccInstance& inst, const Graph& gprime,
                                               const Rc2GadgetLabels& labels,
                                               const EdgeColouring& col)
{
    if (col.k > 2 || !verify_rainbow(gprime, col).connected)
        throw std::invalid_argument(
            "colouring_to_bipartition: input is not a rainbow 2-colouring");
    Bipartitioning x;
    x.x_of.resize(inst.family.size());
    for (size_t t = 0; t < inst.family.size(); ++t) {
        for (int v : inst.family[t])
            if (col.colour[gprime.edge_index(labels.u[v], labels.s[t])] == kBlue)
                x.x_of[t].push_back(v);
        if (x.x_of[t].size() == inst.family[t].size())
            x.x_of[t].clear();
    }
    return x;
}

/// Gadget label files, "kind index -> id" per line.
inline void write_sat_labels(std::ostream& out, const SatGadgetLabels& labels)
{
    for (size_t i = 0; i < labels.vars.size(); ++i) {
        const auto& g = labels.vars[i];
        out << "a " << i + 1 << " -> " << g.a << '\n';
        out << "f " << i + 1 << " -> " << g.f << '\n';
        out << "f1 " << i + 1 << " -> " << g.f1 << '\n';
        out << "f2 " << i + 1 << " -> " << g.f2 << '\n';
        out << "t " << i + 1 << " -> " << g.t << '\n';
        out << "t1 " << i + 1 << " -> " << g.t1 << '\n';
        out << "t2 " << i + 1 << " -> " << g.t2 << '\n';
    }
    for (size_t j = 0; j < labels.clauses.size(); ++j) {
        out << "A " << j + 1 << " -> " << labels.clauses[j].A << '\n';
        out << "F " << j + 1 << " -> " << labels.clauses[j].F << '\n';
    }
    for (size_t i = 0; i < labels.v_sets.size(); ++i) {
        out << "V1 " << i + 1 << " -> " << labels.v_sets[i][0] << '\n';
        out << "V2 " << i + 1 << " -> " << labels.v_sets[i][1] << '\n';
    }
    for (size_t j = 0; j < labels.c_sets.size(); ++j)
        for (int k = 0; k < 3; ++k)
            out << "C" << k + 1 << ' ' << j + 1 << " -> " << labels.c_sets[j][k] << '\n';
}

inline SatGadgetLabels parse_sat_labels(std::istream& in)
{
    SatGadgetLabels labels;
    std::string raw, line;
    int lineno = 0;
    auto at = [&](auto& vec, size_t idx) -> auto& {
        if (vec.size() < idx)
            vec.resize(idx);
        return vec[idx - 1];
    };
    while (std::getline(in, raw)) {
        ++lineno;
        if (!detail::content_line(raw, line))
            continue;
        std::istringstream iss(line);
        std::string kind, arrow;
        size_t idx;
        int id;
        if (!(iss >> kind >> idx >> arrow >> id) || arrow != "->" || idx == 0)
            throw parse_error("line " + std::to_string(lineno) + ": expected 'kind i -> id'");
        if (kind == "a") at(labels.vars, idx).a = id;
        else if (kind == "f") at(labels.vars, idx).f = id;
        else if (kind == "f1") at(labels.vars, idx).f1 = id;
        else if (kind == "f2") at(labels.vars, idx).f2 = id;
        else if (kind == "t") at(labels.vars, idx).t = id;
        else if (kind == "t1") at(labels.vars, idx).t1 = id;
        else if (kind == "t2") at(labels.vars, idx).t2 = id;
        else if (kind == "A") at(labels.clauses, idx).A = id;
        else if (kind == "F") at(labels.clauses, idx).F = id;
        else if (kind == "V1") at(labels.v_sets, idx)[0] = id;
        else if (kind == "V2") at(labels.v_sets, idx)[1] = id;
        else if (kind == "C1") at(labels.c_sets, idx)[0] = id;
        else if (kind == "C2") at(labels.c_sets, idx)[1] = id;
        else if (kind == "C3") at(labels.c_sets, idx)[2] = id;
        else
            throw parse_error("line " + std::to_string(lineno) + ": unknown label kind");
    }
    return labels;
}

inline void write_rc2_labels(std::ostream& out, const Rc2GadgetLabels& labels)
{
    out << "n " << labels.base_n << '\n';
    for (int v = 0; v < labels.base_n; ++v) {
        out << "u " << v << " -> " << labels.u[v] << '\n';
        out << "u' " << v << " -> " << labels.u_prime[v] << '\n';
    }
    for (size_t t = 0; t < labels.s.size(); ++t)
        out << "s " << t << " -> " << labels.s[t] << '\n';
    for (const auto& [e, xe] : labels.x)
        out << "x " << e.first << ' ' << e.second << " -> " << xe << '\n';
}

inline Rc2GadgetLabels parse_rc2_labels(std::istream& in)
{
    Rc2GadgetLabels labels;
    std::string raw, line;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!detail::content_line(raw, line))
            continue;
        std::istringstream iss(line);
        std::string kind, arrow;
        if (!(iss >> kind))
            continue;
        auto bad = [&] {
            return parse_error("line " + std::to_string(lineno) + ": bad label line");
        };
        if (kind == "n") {
            if (!(iss >> labels.base_n))
                throw bad();
            labels.u.resize(labels.base_n);
            labels.u_prime.resize(labels.base_n);
        } else if (kind == "u" || kind == "u'") {
            int v, id;
            if (!(iss >> v >> arrow >> id) || arrow != "->" || v < 0 || v >= labels.base_n)
                throw bad();
            (kind == "u" ? labels.u : labels.u_prime)[v] = id;
        } else if (kind == "s") {
            size_t t;
            int id;
            if (!(iss >> t >> arrow >> id) || arrow != "->")
                throw bad();
            if (labels.s.size() <= t)
                labels.s.resize(t + 1);
            labels.s[t] = id;
        } else if (kind == "x") {
            int v, w, id;
            if (!(iss >> v >> w >> arrow >> id) || arrow != "->")
                throw bad();
            labels.x.push_back({make_edge(v, w), id});
        } else {
            throw bad();
        }
    }
    return labels;
}

}  // namespace rainbow
