// Batch front end: recognition, rainbow connection numbers, colouring
// construction and verification, the reduction pipeline with certificate
// lifting, instance generators, and DOT export. Exit codes: 0 yes/success,
// 1 no, 2 error or capacity.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rainbow/bcc.hpp"
#include "rainbow/dot.hpp"
#include "rainbow/generate.hpp"
#include "rainbow/rc2.hpp"
#include "rainbow/rc_exact.hpp"
#include "rainbow/reduction.hpp"
#include "rainbow/sat.hpp"
#include "rainbow/split.hpp"
#include "rainbow/split_rc.hpp"
#include "rainbow/transforms.hpp"
#include "rainbow/verify.hpp"

namespace {

using namespace rainbow;

std::ifstream open_in(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path + " for reading");
    return in;
}

std::ofstream open_out(const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    return out;
}

Graph load_graph(const std::string& path)
{
    auto in = open_in(path);
    return parse_graph(in);
}

BccInstance load_bcc(const std::string& path)
{
    auto in = open_in(path);
    return parse_bcc(in);
}

// Bipartite instance file: header "n_a n_b m", then one "a b" line per edge.
BipartiteInstance load_bipartite(const std::string& path)
{
    auto in = open_in(path);
    std::string raw, line;
    int lineno = 0;
    BipartiteInstance h;
    int m = -1;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!detail::content_line(raw, line))
            continue;
        std::istringstream iss(line);
        if (m < 0) {
            if (!(iss >> h.n_a >> h.n_b >> m) || h.n_a < 0 || h.n_b < 0 || m < 0)
                throw parse_error("line " + std::to_string(lineno)
                                  + ": expected header 'n_a n_b m'");
        } else {
            int a, b;
            if (!(iss >> a >> b) || a < 0 || a >= h.n_a || b < 0 || b >= h.n_b)
                throw parse_error("line " + std::to_string(lineno) + ": bad cross edge");
            h.edges.push_back({a, b});
        }
    }
    if (m < 0 || static_cast<int>(h.edges.size()) != m)
        throw parse_error("bipartite instance: edge count mismatch");
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

void write_bipartite(std::ostream& out, const BipartiteInstance& h)
{
    out << h.n_a << ' ' << h.n_b << ' ' << h.edges.size() << '\n';
    for (auto [a, b] : h.edges)
        out << a << ' ' << b << '\n';
}

// Edge colouring of a bipartite instance: one "a b colour" line per edge.
std::vector<int> load_bipartite_colouring(const std::string& path, const BipartiteInstance& h)
{
    auto in = open_in(path);
    std::vector<int> col(h.edges.size(), -1);
    std::string raw, line;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!detail::content_line(raw, line))
            continue;
        std::istringstream iss(line);
        int a, b, c;
        if (!(iss >> a >> b >> c) || c < 0 || c > 1)
            throw parse_error("line " + std::to_string(lineno) + ": expected 'a b colour'");
        auto it = std::lower_bound(h.edges.begin(), h.edges.end(), std::pair<int, int>{a, b});
        if (it == h.edges.end() || *it != std::pair<int, int>{a, b})
            throw parse_error("line " + std::to_string(lineno) + ": no such cross edge");
        col[it - h.edges.begin()] = c;
    }
    for (int c : col)
        if (c < 0)
            throw parse_error("bipartite colouring is not total");
    return col;
}

int cmd_recognize(const std::string& path, bool anatomy)
{
    Graph g = load_graph(path);
    auto sp = recognize_split(g);
    if (!sp) {
        std::cout << "not split\n";
        return 1;
    }
    std::cout << "split\n";
    std::cout << "clique:";
    for (int v : sp->clique)
        std::cout << ' ' << v;
    std::cout << "\nindependent:";
    for (int v : sp->independent)
        std::cout << ' ' << v;
    std::cout << "\nthreshold: " << (is_threshold(g) ? "yes" : "no") << '\n';
    if (anatomy) {
        if (!is_connected(g)) {
            std::cout << "anatomy: disconnected\n";
        } else {
            int p = static_cast<int>(pendant_set(g).size());
            write_anatomy(std::cout, build_anatomy(g, *sp, p));
        }
    }
    return 0;
}

int cmd_rc(const std::string& path, const std::string& mode, int edge_limit,
           const std::string& out_path)
{
    Graph g = load_graph(path);
    if (mode == "lower-bound") {
        std::cout << rc_lower_bound(g) << '\n';
        return 0;
    }
    RcResult result = mode == "exact" ? rc_exact(g, edge_limit) : rc_split(g, edge_limit);
    std::cout << result.rc << '\n';
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        write_colouring(out, g, result.witness);
    }
    return 0;
}

int cmd_decide(const std::string& path, int k)
{
    return decide_rc_at_most_k(load_graph(path), k) ? 0 : 1;
}

int cmd_colour(const std::string& path, int k, const std::string& out_path)
{
    Graph g = load_graph(path);
    if (!decide_rc_at_most_k(g, k))
        return 1;
    EdgeColouring c = colour_with_k(g, k);
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        write_colouring(out, g, c);
    } else {
        write_colouring(std::cout, g, c);
    }
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& col_path, bool witness,
               int mask_budget)
{
    Graph g = load_graph(graph_path);
    auto in = open_in(col_path);
    EdgeColouring c = parse_colouring(in, g);
    RainbowReport report = verify_rainbow(g, c, witness, mask_budget);
    write_report(std::cout, g, c, report);
    return report.connected ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"rainbow colouring toolkit for split graphs"};
    app.require_subcommand(1);

    std::string in_path, out_path, labels_path, graph_path, aux_path;
    std::string mode = "split";
    int k = 4;
    int edge_limit = rainbow::kDefaultEdgeLimit;
    int mask_budget = rainbow::kDefaultMaskBudget;
    unsigned seed = 1;
    bool anatomy = false, witness = false;

    auto* rec = app.add_subcommand("recognize", "split/threshold recognition report");
    rec->add_option("graph", in_path)->required();
    rec->add_flag("--anatomy", anatomy, "also print the case decomposition");

    auto* rc = app.add_subcommand("rc", "rainbow connection number");
    rc->add_option("graph", in_path)->required();
    rc->add_option("--mode", mode)->check(CLI::IsMember({"exact", "split", "lower-bound"}));
    rc->add_option("--edge-limit", edge_limit);
    rc->add_option("--out", out_path, "witness colouring file");

    auto* dec = app.add_subcommand("decide", "is rc(G) <= k? (split graphs, k >= 4)");
    dec->add_option("graph", in_path)->required();
    dec->add_option("-k", k)->required();

    auto* col = app.add_subcommand("colour", "construct a rainbow colouring with <= k colours");
    col->add_option("graph", in_path)->required();
    col->add_option("-k", k)->required();
    col->add_option("--out", out_path);

    auto* ver = app.add_subcommand("verify", "verify a rainbow colouring");
    ver->add_option("graph", in_path)->required();
    ver->add_option("colouring", aux_path)->required();
    ver->add_flag("--witness", witness, "print witness paths");
    ver->add_option("--mask-budget", mask_budget);

    auto* red = app.add_subcommand("reduce", "instance reductions");
    std::string red_kind;
    red->add_option("kind", red_kind)
        ->required()
        ->check(CLI::IsMember({"sat2bcc", "bcc2rc2", "rc2bipartite", "bip2matrix",
                               "bip2packing"}));
    red->add_option("--in", in_path)->required();
    red->add_option("--out", out_path)->required();
    red->add_option("--labels", labels_path, "gadget label file to write/read");
    red->add_option("--graph", graph_path, "G' graph file (rc2bipartite)");

    auto* lift = app.add_subcommand("lift", "certificate lifting");
    std::string lift_kind;
    lift->add_option("kind", lift_kind)
        ->required()
        ->check(CLI::IsMember({"eval2X", "X2eval", "X2col", "col2X", "col2packing"}));
    lift->add_option("--in", in_path, "certificate to lift")->required();
    lift->add_option("--out", out_path)->required();
    lift->add_option("--instance", aux_path, "cnf / bcc / bipartite instance file");
    lift->add_option("--labels", labels_path);
    lift->add_option("--graph", graph_path, "G' graph file");

    auto* gen = app.add_subcommand("gen", "seeded instance generators");
    std::string gen_kind;
    rainbow::SpecialParams sp;
    int gen_n = 10, gen_vars = 3, gen_clauses = 3;
    gen->add_option("kind", gen_kind)
        ->required()
        ->check(CLI::IsMember({"g111", "g400", "g310", "g2200", "g220", "g220z",
                               "random-split", "random-threshold", "random-3cnf"}));
    gen->add_option("--clique", sp.clique);
    gen->add_option("--iprime", sp.i_prime);
    gen->add_option("--extra", sp.extra_pendants);
    gen->add_option("--n", gen_n);
    gen->add_option("--vars", gen_vars);
    gen->add_option("--clauses", gen_clauses);
    gen->add_option("--seed", seed);
    gen->add_option("--out", out_path)->required();

    auto* dot = app.add_subcommand("export-dot", "Graphviz export");
    dot->add_option("graph", in_path)->required();
    dot->add_option("--colouring", aux_path);
    dot->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        using namespace rainbow;
        if (rec->parsed())
            return cmd_recognize(in_path, anatomy);
        if (rc->parsed())
            return cmd_rc(in_path, mode, edge_limit, out_path);
        if (dec->parsed())
            return cmd_decide(in_path, k);
        if (col->parsed())
            return cmd_colour(in_path, k, out_path);
        if (ver->parsed())
            return cmd_verify(in_path, aux_path, witness, mask_budget);

        if (red->parsed()) {
            if (red_kind == "sat2bcc") {
                auto in = open_in(in_path);
                auto reduction = sat_to_bcc(parse_dimacs(in));
                auto out = open_out(out_path);
                write_bcc(out, reduction.instance);
                if (!labels_path.empty()) {
                    auto lout = open_out(labels_path);
                    write_sat_labels(lout, reduction.labels);
                }
            } else if (red_kind == "bcc2rc2") {
                auto reduction = bcc_to_rc2(load_bcc(in_path));
                auto out = open_out(out_path);
                write_graph(out, reduction.graph);
                if (!labels_path.empty()) {
                    auto lout = open_out(labels_path);
                    write_rc2_labels(lout, reduction.labels);
                }
            } else if (red_kind == "rc2bipartite") {
                Graph gprime = load_graph(in_path);
                auto lin = open_in(labels_path);
                auto h = rc2_core_to_bipartite(gprime, parse_rc2_labels(lin));
                auto out = open_out(out_path);
                write_bipartite(out, h);
            } else if (red_kind == "bip2matrix") {
                auto out = open_out(out_path);
                write_matrix_instance(out, bipartite_to_matrix(load_bipartite(in_path)));
            } else {  // bip2packing
                auto out = open_out(out_path);
                write_packing_instance(out, bipartite_to_packing(load_bipartite(in_path)));
            }
            return 0;
        }

        if (lift->parsed()) {
            if (lift_kind == "eval2X") {
                auto cin = open_in(aux_path);
                CnfFormula phi = parse_dimacs(cin);
                auto lin = open_in(labels_path);
                auto labels = parse_sat_labels(lin);
                auto ein = open_in(in_path);
                auto x = assignment_to_bipartition(phi, labels, parse_assignment(ein, phi));
                auto out = open_out(out_path);
                write_bipartitioning(out, x);
            } else if (lift_kind == "X2eval") {
                BccInstance inst = load_bcc(aux_path);
                auto lin = open_in(labels_path);
                auto labels = parse_sat_labels(lin);
                auto xin = open_in(in_path);
                auto eval = bipartition_to_assignment(inst, labels, parse_bipartitioning(xin, inst));
                auto out = open_out(out_path);
                write_assignment(out, eval);
            } else if (lift_kind == "X2col") {
                BccInstance inst = load_bcc(aux_path);
                Graph gprime = load_graph(graph_path);
                auto lin = open_in(labels_path);
                auto labels = parse_rc2_labels(lin);
                auto xin = open_in(in_path);
                auto c = bipartition_to_colouring(inst, gprime, labels,
                                                  parse_bipartitioning(xin, inst));
                auto out = open_out(out_path);
                write_colouring(out, gprime, c);
            } else if (lift_kind == "col2X") {
                BccInstance inst = load_bcc(aux_path);
                Graph gprime = load_graph(graph_path);
                auto lin = open_in(labels_path);
                auto labels = parse_rc2_labels(lin);
                auto cin = open_in(in_path);
                auto x = colouring_to_bipartition(inst, gprime, labels,
                                                  parse_colouring(cin, gprime));
                auto out = open_out(out_path);
                write_bipartitioning(out, x);
            } else {  // col2packing
                BipartiteInstance h = load_bipartite(aux_path);
                auto col = load_bipartite_colouring(in_path, h);
                auto out = open_out(out_path);
                write_placements(out, colouring_to_packing(h, col));
            }
            return 0;
        }

        if (gen->parsed()) {
            auto out = open_out(out_path);
            if (gen_kind == "random-split") {
                write_graph(out, gen_random_split(gen_n, seed));
            } else if (gen_kind == "random-threshold") {
                write_graph(out, gen_random_threshold(gen_n, seed));
            } else if (gen_kind == "random-3cnf") {
                write_dimacs(out, gen_random_3cnf(gen_vars, gen_clauses, seed));
            } else {
                SpecialKind kind = gen_kind == "g111"    ? SpecialKind::G111
                                   : gen_kind == "g400"  ? SpecialKind::G400
                                   : gen_kind == "g310"  ? SpecialKind::G310
                                   : gen_kind == "g2200" ? SpecialKind::G2200
                                   : gen_kind == "g220"  ? SpecialKind::G220
                                                         : SpecialKind::G220z;
                write_graph(out, gen_special(kind, sp, seed));
            }
            return 0;
        }

        if (dot->parsed()) {
            Graph g = load_graph(in_path);
            EdgeColouring c;
            bool have_colouring = !aux_path.empty();
            if (have_colouring) {
                auto cin = open_in(aux_path);
                c = parse_colouring(cin, g);
            }
            if (out_path.empty()) {
                export_dot(std::cout, g, have_colouring ? &c : nullptr);
            } else {
                auto out = open_out(out_path);
                export_dot(out, g, have_colouring ? &c : nullptr);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
