#pragma once

#include <array>
#include <cassert>
#include <map>

#include "rainbow/rc2.hpp"
#include "rainbow/rc_exact.hpp"
#include "rainbow/split.hpp"

namespace rainbow {

/// The structural cases of the pendant-count colouring machinery. The four
/// main tags pick one of the explicit case colourings; G220 marks the
/// exceptional host whose rainbow connection number exceeds its pendant
/// count, and G220z its repaired variant. Tree and SmallPendant mark
/// inputs outside the case analysis.
enum class CaseTag { G111, G400, G310, G2200, G220, G220z, Tree, SmallPendant };

inline const char* to_string(CaseTag tag)
{
    switch (tag) {
    case CaseTag::G111: return "G111";
    case CaseTag::G400: return "G400";
    case CaseTag::G310: return "G310";
    case CaseTag::G2200: return "G2200";
    case CaseTag::G220: return "G220";
    case CaseTag::G220z: return "G220z";
    case CaseTag::Tree: return "TREE";
    default: return "SMALL_PENDANT";
    }
}

/// A non-pendant independent vertex with its two designated clique
/// neighbours and the clique parts those neighbours live in (part_a <= part_b).
struct IPrimeClass {
    int vertex = -1;
    int part_a = -1, part_b = -1;
    int nbr_a = -1, nbr_b = -1;
};

/// Labelled decomposition a case colouring consumes: the special clique
/// vertices, the clique parts, the labelled pendants y_0.., the classes of
/// the remaining independent vertices, and the pendants to strip first.
struct CliqueAnatomy {
    SplitPartition partition;
    CaseTag tag = CaseTag::SmallPendant;
    std::vector<int> special;                      // x0, x1 [, x2]
    std::vector<std::vector<int>> k_parts;         // K0.. (last part is the remainder)
    std::vector<int> labelled_pendants;            // y_i -> vertex id
    std::vector<std::pair<int, int>> pendant_map;  // (y_i, its clique neighbour)
    std::vector<IPrimeClass> i_classes;
    std::vector<int> extra_pendants;               // pen(G) minus the labelled ones
    bool has_z = false;
};

namespace detail {

inline std::vector<int> part_lookup(const CliqueAnatomy& anat, int n)
{
    std::vector<int> part(n, -1);
    for (size_t p = 0; p < anat.k_parts.size(); ++p)
        for (int v : anat.k_parts[p])
            part[v] = static_cast<int>(p);
    return part;
}

}  // namespace detail

/// Classifies a connected split graph with p = k >= 4 pendants into the
/// case analysis: three or more pendant-bearing clique vertices give G111;
/// otherwise the pendant distribution (a, b) over at most two bearers gives
/// G400 (a>=4), G310 (a>=3, b>=1), G2200 ((2,2) with |K|>=4), or the
/// exceptional G220 / G220z ((2,2) with |K|=3, repaired when some
/// independent vertex sees both bearers). Trees and graphs with at most 3
/// pendants are tagged as such and carry no case decomposition.
inline CliqueAnatomy build_anatomy(const Graph& g, const SplitPartition& sp, int k)
{
    if (!is_connected(g))
        throw std::invalid_argument("build_anatomy: graph must be connected");
    CliqueAnatomy anat;
    anat.partition = sp;
    if (is_tree(g)) {
        anat.tag = CaseTag::Tree;
        return anat;
    }
    auto pendants = pendant_set(g);
    int p = static_cast<int>(pendants.size());
    if (k != p)
        throw std::invalid_argument("build_anatomy: k must equal the pendant count");
    const auto& clique = sp.clique;
    if (p >= 4 && clique.size() < 3)
        throw std::invalid_argument("build_anatomy: clique side unexpectedly small");

    std::map<int, std::vector<int>> bearer;  // clique vertex -> its pendants, ascending
    for (int y : pendants)
        bearer[g.neighbours(y)[0]].push_back(y);
    if (p <= 3) {
        // Below the case analysis, except that three pendants on three
        // distinct clique vertices are already a complete G111 host.
        if (p < 3 || bearer.size() < 3) {
            anat.tag = CaseTag::SmallPendant;
            return anat;
        }
    }

    std::vector<bool> is_pendant(g.vertex_count(), false);
    for (int y : pendants)
        is_pendant[y] = true;
    std::vector<int> i_prime;
    for (int v : sp.independent)
        if (!is_pendant[v])
            i_prime.push_back(v);

    auto remainder_part = [&](const std::vector<int>& taken) {
        std::vector<int> rest;
        for (int v : clique)
            if (std::find(taken.begin(), taken.end(), v) == taken.end())
                rest.push_back(v);
        return rest;
    };

    if (bearer.size() >= 3) {
        anat.tag = CaseTag::G111;
        auto it = bearer.begin();
        int x0 = it->first;
        int x1 = (++it)->first;
        int t = (++it)->first;  // third bearer; lives in K2
        anat.special = {x0, x1};
        anat.k_parts = {{x0}, {x1}, remainder_part({x0, x1})};
        anat.labelled_pendants = {bearer[x0][0], bearer[x1][0], bearer[t][0]};
    } else {
        std::vector<std::pair<int, int>> counts;  // (bearer vertex, count)
        for (const auto& [v, ys] : bearer)
            counts.push_back({v, static_cast<int>(ys.size())});
        std::sort(counts.begin(), counts.end(), [](auto a, auto b) {
            if (a.second != b.second)
                return a.second > b.second;
            return a.first < b.first;
        });
        int a = counts[0].second;
        int b = counts.size() > 1 ? counts[1].second : 0;
        int x0 = counts[0].first;
        if (b == 0) {
            anat.tag = CaseTag::G400;
            int x1 = clique[0] != x0 ? clique[0] : clique[1];
            anat.special = {x0, x1};
            anat.k_parts = {{x0}, {x1}, remainder_part({x0, x1})};
            const auto& ys = bearer[x0];
            anat.labelled_pendants = {ys[0], ys[1], ys[2], ys[3]};
        } else if (a >= 3) {
            anat.tag = CaseTag::G310;
            int x1 = counts[1].first;
            anat.special = {x0, x1};
            anat.k_parts = {{x0}, {x1}, remainder_part({x0, x1})};
            // y0, y1, y3 hang off x0; y2 hangs off x1.
            anat.labelled_pendants = {bearer[x0][0], bearer[x0][1], bearer[x1][0], bearer[x0][2]};
        } else {
            assert(a == 2 && b == 2);
            int x1 = counts[1].first;
            int x2 = -1;
            for (int v : clique)
                if (v != x0 && v != x1) {
                    x2 = v;
                    break;
                }
            anat.special = {x0, x1, x2};
            if (clique.size() >= 4) {
                anat.tag = CaseTag::G2200;
                anat.k_parts = {{x0}, {x1}, {x2}, remainder_part({x0, x1, x2})};
                // y0, y2 hang off x0; y1, y3 hang off x1.
                anat.labelled_pendants = {bearer[x0][0], bearer[x1][0], bearer[x0][1], bearer[x1][1]};
            } else {
                anat.k_parts = {{x0}, {x1}, {x2}};
                // y0, y1 hang off x0; y2, y3 hang off x1.
                anat.labelled_pendants = {bearer[x0][0], bearer[x0][1], bearer[x1][0], bearer[x1][1]};
                for (int v : i_prime)
                    if (g.adjacent(v, x0) && g.adjacent(v, x1)) {
                        anat.has_z = true;
                        break;
                    }
                anat.tag = anat.has_z ? CaseTag::G220z : CaseTag::G220;
            }
        }
    }

    for (int y : anat.labelled_pendants)
        anat.pendant_map.push_back({y, g.neighbours(y)[0]});
    for (int y : pendants)
        if (std::find(anat.labelled_pendants.begin(), anat.labelled_pendants.end(), y)
            == anat.labelled_pendants.end())
            anat.extra_pendants.push_back(y);

    auto part = detail::part_lookup(anat, g.vertex_count());
    bool exceptional = anat.tag == CaseTag::G220 || anat.tag == CaseTag::G220z;
    for (int v : i_prime) {
        IPrimeClass cls;
        cls.vertex = v;
        int d1 = -1, d2 = -1;
        if (exceptional) {
            // Designation by adjacency type, preferring {x0, x1}: the repair
            // path through a witness of the bearers must keep its two edges.
            int x0 = anat.special[0], x1 = anat.special[1], x2 = anat.special[2];
            if (g.adjacent(v, x0) && g.adjacent(v, x1)) {
                d1 = x0;
                d2 = x1;
            } else if (g.adjacent(v, x0)) {
                d1 = x0;
                d2 = x2;
            } else {
                d1 = x1;
                d2 = x2;
            }
        } else {
            d1 = g.neighbours(v)[0];
            d2 = g.neighbours(v)[1];
        }
        if (part[d1] <= part[d2]) {
            cls.nbr_a = d1;
            cls.nbr_b = d2;
        } else {
            cls.nbr_a = d2;
            cls.nbr_b = d1;
        }
        cls.part_a = part[cls.nbr_a];
        cls.part_b = part[cls.nbr_b];
        if (cls.part_a == cls.part_b && cls.nbr_a > cls.nbr_b)
            std::swap(cls.nbr_a, cls.nbr_b);
        anat.i_classes.push_back(cls);
    }
    return anat;
}

/// Emits the explicit case colouring for the anatomy's tag. Pendant edges
/// take the colour of their label index; clique edges follow the per-case
/// part table; designated independent edges follow their class; all other
/// independent edges take colour 0. Uses 3 colours for G111 and 4 for the
/// other cases.
inline EdgeColouring colour_special(const Graph& g, const CliqueAnatomy& anat)
{
    if (anat.tag == CaseTag::G220 || anat.tag == CaseTag::Tree
        || anat.tag == CaseTag::SmallPendant)
        throw std::invalid_argument("colour_special: no case colouring for this tag");
    if (!anat.extra_pendants.empty())
        throw std::invalid_argument("colour_special: strip extra pendants first");

    auto part = detail::part_lookup(anat, g.vertex_count());

    std::map<std::pair<int, int>, int> clique_col;
    switch (anat.tag) {
    case CaseTag::G111:
        clique_col = {{{0, 1}, 2}, {{0, 2}, 1}, {{1, 2}, 0}, {{2, 2}, 1}};
        break;
    case CaseTag::G400:
    case CaseTag::G310:
        clique_col = {{{0, 1}, 3}, {{1, 2}, 0}, {{0, 2}, 1}, {{2, 2}, 1}};
        break;
    case CaseTag::G2200:
        clique_col = {{{0, 1}, 2}, {{1, 2}, 0}, {{2, 3}, 0}, {{0, 3}, 1},
                      {{0, 2}, 3}, {{1, 3}, 0}, {{3, 3}, 1}};
        break;
    default:  // G220z
        clique_col = {{{0, 1}, 0}, {{0, 2}, 1}, {{1, 2}, 3}};
        break;
    }

    std::vector<int> pendant_label(g.vertex_count(), -1);
    for (size_t i = 0; i < anat.labelled_pendants.size(); ++i)
        pendant_label[anat.labelled_pendants[i]] = static_cast<int>(i);
    std::vector<int> class_of(g.vertex_count(), -1);
    for (size_t i = 0; i < anat.i_classes.size(); ++i)
        class_of[anat.i_classes[i].vertex] = static_cast<int>(i);

    int last_part = static_cast<int>(anat.k_parts.size()) - 1;
    EdgeColouring c;
    c.k = anat.tag == CaseTag::G111 ? 3 : 4;
    c.colour.assign(g.edge_count(), 0);
    for (int idx = 0; idx < g.edge_count(); ++idx) {
        auto [u, v] = g.edges()[idx];
        if (part[u] >= 0 && part[v] >= 0) {
            auto key = std::minmax(part[u], part[v]);
            c.colour[idx] = clique_col.at({key.first, key.second});
            continue;
        }
        int w = part[u] < 0 ? u : v;  // the independent endpoint
        int x = part[u] < 0 ? v : u;
        if (pendant_label[w] >= 0) {
            c.colour[idx] = pendant_label[w];
            continue;
        }
        const IPrimeClass& cls = anat.i_classes[class_of[w]];
        if (x != cls.nbr_a && x != cls.nbr_b)
            continue;  // undesignated edge keeps colour 0
        bool first = x == cls.nbr_a;
        if (anat.tag == CaseTag::G220z) {
            // By class: {x0,x1} -> (2,1); {x0,x2} -> (2,1); {x1,x2} -> (2,3).
            if (cls.part_a == 1)
                c.colour[idx] = first ? 2 : 3;
            else
                c.colour[idx] = first ? 2 : 1;
        } else if (cls.part_a == cls.part_b) {
            // Both designated neighbours in the remainder part.
            c.colour[idx] = first ? 0 : last_part;
        } else {
            c.colour[idx] = first ? cls.part_a : cls.part_b;
        }
    }
    return c;
}

/// Lifts a colouring of g minus the given pendants back to g, giving each
/// stripped pendant edge a fresh colour. The base colouring is indexed by
/// the induced subgraph that keeps every other vertex (ascending order).
inline EdgeColouring extend_pendants(const Graph& g, const EdgeColouring& base,
                                     const std::vector<int>& extra_pendants)
{
    std::vector<bool> keep(g.vertex_count(), true);
    for (int y : extra_pendants) {
        if (g.degree(y) != 1)
            throw std::invalid_argument("extend_pendants: vertex is not a pendant");
        keep[y] = false;
    }
    Induced ind = induced_subgraph(g, keep);
    if (static_cast<int>(base.colour.size()) != ind.graph.edge_count())
        throw std::invalid_argument("extend_pendants: base colouring does not match core");

    EdgeColouring c;
    c.k = base.k + static_cast<int>(extra_pendants.size());
    c.colour.assign(g.edge_count(), -1);
    for (int i = 0; i < ind.graph.edge_count(); ++i) {
        auto [u, v] = ind.graph.edges()[i];
        c.colour[g.edge_index(ind.to_old[u], ind.to_old[v])] = base.colour[i];
    }
    std::vector<int> extras = extra_pendants;
    std::sort(extras.begin(), extras.end());
    int next = base.k;
    for (int y : extras)
        c.colour[g.edge_index(y, g.neighbours(y)[0])] = next++;
    return c;
}

namespace detail {

inline CliqueAnatomy remap_anatomy(const CliqueAnatomy& anat, const Induced& ind)
{
    CliqueAnatomy out;
    out.tag = anat.tag;
    out.has_z = anat.has_z;
    auto map = [&](int v) { return ind.to_new[v]; };
    for (int v : anat.partition.clique)
        out.partition.clique.push_back(map(v));
    for (int v : anat.partition.independent)
        if (ind.to_new[v] >= 0)
            out.partition.independent.push_back(map(v));
    for (int v : anat.special)
        out.special.push_back(map(v));
    for (const auto& p : anat.k_parts) {
        out.k_parts.push_back({});
        for (int v : p)
            out.k_parts.back().push_back(map(v));
    }
    for (int v : anat.labelled_pendants)
        out.labelled_pendants.push_back(map(v));
    for (auto [y, x] : anat.pendant_map)
        out.pendant_map.push_back({map(y), map(x)});
    for (auto cls : anat.i_classes) {
        cls.vertex = map(cls.vertex);
        cls.nbr_a = map(cls.nbr_a);
        cls.nbr_b = map(cls.nbr_b);
        out.i_classes.push_back(cls);
    }
    return out;
}

// Case colouring of a connected non-tree split graph with p >= 4 pendants:
// strips the pendants beyond the case's own, colours the core by its case
// table, and extends fresh colours over the stripped pendant edges.
// Uses exactly p colours.
inline EdgeColouring colour_by_case(const Graph& g)
{
    auto sp = recognize_split(g);
    if (!sp)
        throw std::invalid_argument("colour_by_case: not a split graph");
    int p = static_cast<int>(pendant_set(g).size());
    CliqueAnatomy anat = build_anatomy(g, *sp, p);
    if (anat.tag == CaseTag::G220)
        throw std::invalid_argument("colour_by_case: G220 host admits no p-colouring");
    if (anat.extra_pendants.empty())
        return colour_special(g, anat);
    std::vector<bool> keep(g.vertex_count(), true);
    for (int y : anat.extra_pendants)
        keep[y] = false;
    Induced ind = induced_subgraph(g, keep);
    EdgeColouring base = colour_special(ind.graph, remap_anatomy(anat, ind));
    return extend_pendants(g, base, anat.extra_pendants);
}

// g plus `dummies` new pendant vertices placed on clique vertices so that
// the augmented graph never classifies as G220: grow the bearer set to 3
// when possible (G111), otherwise the distribution ends (>=3, 1) (G310).
inline Graph augment_with_dummies(const Graph& g, const SplitPartition& sp, int dummies,
                                  const std::vector<int>& force_targets = {})
{
    std::vector<bool> bearing(g.vertex_count(), false);
    for (int y : pendant_set(g))
        bearing[g.neighbours(y)[0]] = true;
    int bearers = static_cast<int>(std::count(bearing.begin(), bearing.end(), true));

    std::vector<int> attach = force_targets;
    dummies -= static_cast<int>(force_targets.size());
    for (int v : sp.clique) {
        if (dummies <= 0 || bearers >= 3)
            break;
        if (!bearing[v]) {
            attach.push_back(v);
            bearing[v] = true;
            ++bearers;
            --dummies;
        }
    }
    while (dummies-- > 0)
        attach.push_back(sp.clique[0]);

    auto edges = g.edges();
    int next = g.vertex_count();
    for (int v : attach)
        edges.push_back({v, next++});
    return Graph::from_edges(next, std::move(edges));
}

inline EdgeColouring restrict_to(const Graph& g, const Graph& augmented,
                                 const EdgeColouring& col)
{
    EdgeColouring c;
    c.k = col.k;
    c.colour.reserve(g.edge_count());
    for (auto [u, v] : g.edges())
        c.colour.push_back(col.colour[augmented.edge_index(u, v)]);
    return c;
}

}  // namespace detail

/// Polynomial decision of rc(g) <= k for split graphs, k >= 4: trees by
/// edge count; otherwise by pendant count, except that exactly k = 4
/// pendants in the (2,2)-on-a-triangle shape without a repair witness push
/// the answer above 4.
inline bool decide_rc_at_most_k(const Graph& g, int k)
{
    if (k < 4)
        throw std::invalid_argument("decide_rc_at_most_k: k < 4 is the hard regime");
    auto sp = recognize_split(g);
    if (!sp || !is_connected(g))
        throw std::invalid_argument("decide_rc_at_most_k: input must be a connected split graph");
    if (is_tree(g))
        return g.edge_count() <= k;
    int p = static_cast<int>(pendant_set(g).size());
    if (p > k)
        return false;
    if (p <= k - 1)
        return true;
    return build_anatomy(g, *sp, k).tag != CaseTag::G220;
}

/// Constructs a rainbow colouring with at most k colours (k >= 4) for a
/// yes-instance of the decision above. When the pendant count falls short
/// of k, the graph is first padded with dummy pendants on clique vertices,
/// coloured, and the dummy edges dropped; a degree-one vertex is never
/// interior to a path, so the restriction stays rainbow connected.
inline EdgeColouring colour_with_k(const Graph& g, int k)
{
    if (!decide_rc_at_most_k(g, k))
        throw std::invalid_argument("colour_with_k: rc exceeds k");
    if (is_tree(g)) {
        EdgeColouring c;
        c.k = std::max(1, g.edge_count());
        for (int i = 0; i < g.edge_count(); ++i)
            c.colour.push_back(i);
        return c;
    }
    int p = static_cast<int>(pendant_set(g).size());
    if (p == k)
        return detail::colour_by_case(g);
    Graph augmented = detail::augment_with_dummies(g, *recognize_split(g), k - p);
    return detail::restrict_to(g, augmented, detail::colour_by_case(augmented));
}

/// Rainbow connection number of a connected split graph with witness:
/// closed forms for complete graphs and trees, the pendant-count machinery
/// for p >= 4 (with the G220 exception at p + 1), and capacity-gated exact
/// probes for the NP-hard small-pendant regime.
inline RcResult rc_split(const Graph& g, int edge_limit = kDefaultEdgeLimit)
{
    auto sp = recognize_split(g);
    if (!sp || !is_connected(g))
        throw std::invalid_argument("rc_split: input must be a connected split graph");
    if (is_complete(g)) {
        EdgeColouring c;
        c.k = 1;
        c.colour.assign(g.edge_count(), 0);
        return {1, c};
    }
    if (is_tree(g)) {
        EdgeColouring c;
        c.k = g.edge_count();
        for (int i = 0; i < g.edge_count(); ++i)
            c.colour.push_back(i);
        return {g.edge_count(), c};
    }
    int p = static_cast<int>(pendant_set(g).size());
    if (p >= 4) {
        CliqueAnatomy anat = build_anatomy(g, *sp, p);
        if (anat.tag == CaseTag::G220) {
            // rc = p + 1 = 5: one dummy pendant on x2 turns the host into a
            // three-bearer G111 instance on five pendants.
            Graph augmented = detail::augment_with_dummies(g, *sp, 1, {anat.special[2]});
            return {5, detail::restrict_to(g, augmented, detail::colour_by_case(augmented))};
        }
        return {p, colour_with_k(g, p)};
    }
    if (g.edge_count() > edge_limit)
        throw capacity_error("rc_split: exact probes for p <= 3 need m <= "
                             + std::to_string(edge_limit));
    if (auto two = solve_rc2(g))
        return {2, *two};
    if (auto three = find_colouring(g, 3))
        return {3, *three};
    return {4, colour_with_k(g, 4)};
}

/// Diagnostic text dump of an anatomy.
inline void write_anatomy(std::ostream& out, const CliqueAnatomy& anat)
{
    out << "case " << to_string(anat.tag) << '\n';
    for (size_t i = 0; i < anat.special.size(); ++i)
        out << 'x' << i << ' ' << anat.special[i] << '\n';
    for (size_t p = 0; p < anat.k_parts.size(); ++p) {
        out << 'K' << p << " :";
        for (int v : anat.k_parts[p])
            out << ' ' << v;
        out << '\n';
    }
    for (size_t i = 0; i < anat.labelled_pendants.size(); ++i)
        out << 'y' << i << ' ' << anat.labelled_pendants[i] << " on "
            << anat.pendant_map[i].second << '\n';
    for (const auto& cls : anat.i_classes)
        out << "I" << cls.part_a << ',' << cls.part_b << ' ' << cls.vertex
            << " via " << cls.nbr_a << ' ' << cls.nbr_b << '\n';
    if (!anat.extra_pendants.empty()) {
        out << "extra :";
        for (int v : anat.extra_pendants)
            out << ' ' << v;
        out << '\n';
    }
}

}  // namespace rainbow
