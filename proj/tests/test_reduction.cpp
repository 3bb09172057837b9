#include <catch2/catch_amalgamated.hpp>

#include "rainbow/generate.hpp"
#include "rainbow/rc2.hpp"
#include "rainbow/reduction.hpp"
#include "rainbow/split.hpp"

#include "oracles.hpp"

using namespace rainbow;

namespace {

CnfFormula formula(int variables, std::vector<std::array<int, 3>> clauses)
{
    CnfFormula phi;
    phi.variables = variables;
    phi.clauses = std::move(clauses);
    return phi;
}

}  // namespace

TEST_CASE("sat_to_bcc size formulas")
{
    auto phi = formula(3, {{1, -2, 3}});
    auto red = sat_to_bcc(phi);
    CHECK(red.instance.base.vertex_count() == 23);   // 7n + 2m
    CHECK(red.instance.base.edge_count() == 34);     // 8n + 10m
    CHECK(red.instance.family.size() == 9);          // 2n + 3m

    for (unsigned seed = 0; seed < 10; ++seed) {
        auto random_phi = gen_random_3cnf(3 + seed % 3, 1 + seed % 4, seed);
        auto r = sat_to_bcc(random_phi);
        int n = random_phi.variables, m = static_cast<int>(random_phi.clauses.size());
        CHECK(r.instance.base.vertex_count() == 7 * n + 2 * m);
        CHECK(r.instance.base.edge_count() == 8 * n + 10 * m);
        CHECK(static_cast<int>(r.instance.family.size()) == 2 * n + 3 * m);
    }
}

TEST_CASE("sat_to_bcc places clause vertices by literal sign")
{
    auto phi = formula(3, {{1, -2, 3}});
    auto red = sat_to_bcc(phi);
    const auto& labels = red.labels;
    auto contains = [&](int set_idx, int v) {
        const auto& set = red.instance.family[set_idx];
        return std::binary_search(set.begin(), set.end(), v);
    };
    int a1 = labels.clauses[0].A;
    CHECK(contains(labels.v_sets[0][0], a1));        // v1 positive -> V_1^1
    CHECK_FALSE(contains(labels.v_sets[0][1], a1));
    CHECK(contains(labels.v_sets[1][1], a1));        // not v2 -> V_2^2
    CHECK_FALSE(contains(labels.v_sets[1][0], a1));
    CHECK(contains(labels.v_sets[2][0], a1));        // v3 positive -> V_3^1

    // C_1^1 = {t_1, A_1, F_1}
    std::vector<int> expected{labels.vars[0].t, labels.clauses[0].A, labels.clauses[0].F};
    std::sort(expected.begin(), expected.end());
    CHECK(red.instance.family[labels.c_sets[0][0]] == expected);
}

TEST_CASE("gadget edges follow the unique-coverage pattern")
{
    auto phi = formula(3, {{1, -2, 3}});
    auto red = sat_to_bcc(phi);
    const auto& labels = red.labels;
    auto unique = uniquely_coverable(red.instance);
    CHECK(unique.uncoverable.empty());
    auto uniqueness = [&](Edge e) {
        for (auto [edge, t] : unique.unique_edges)
            if (edge == e)
                return t;
        return -1;
    };
    // a_i f_i lies in both V_i^1 and V_i^2: not unique
    CHECK(uniqueness(make_edge(labels.vars[0].a, labels.vars[0].f)) == -1);
    // f_i t_i^1 is unique to V_i^1
    CHECK(uniqueness(make_edge(labels.vars[0].f, labels.vars[0].t1))
          == labels.v_sets[0][0]);
    // A_j F_j co-occurs in all three C_j^k sets
    CHECK(uniqueness(make_edge(labels.clauses[0].A, labels.clauses[0].F)) == -1);
}

TEST_CASE("assignment_to_bipartition splits the gadgets by truth value")
{
    auto phi = formula(3, {{1, -2, 3}});
    auto red = sat_to_bcc(phi);
    const auto& labels = red.labels;
    SatAssignment eval{{true, false, false}};

    auto x = assignment_to_bipartition(phi, labels, eval);
    const auto& vg = labels.vars[0];
    std::vector<int> x_v11{vg.a, vg.t, vg.t1};
    std::sort(x_v11.begin(), x_v11.end());
    CHECK(x.x_of[labels.v_sets[0][0]] == x_v11);
    std::vector<int> x_v12{vg.a, vg.f, vg.f2};
    std::sort(x_v12.begin(), x_v12.end());
    CHECK(x.x_of[labels.v_sets[0][1]] == x_v12);

    const auto& vg1 = labels.vars[1];
    std::vector<int> x_v21{vg1.a, vg1.f, vg1.f1};
    std::sort(x_v21.begin(), x_v21.end());
    CHECK(x.x_of[labels.v_sets[1][0]] == x_v21);  // eval(v2) = false

    // first literal (v1) true -> X(C_1^1) = {A_1, t_1}
    std::vector<int> xc{labels.clauses[0].A, labels.vars[0].t};
    std::sort(xc.begin(), xc.end());
    CHECK(x.x_of[labels.c_sets[0][0]] == xc);
    // second literal (not v2) true as well
    std::vector<int> xc2{labels.clauses[0].A, labels.vars[1].t};
    std::sort(xc2.begin(), xc2.end());
    CHECK(x.x_of[labels.c_sets[0][1]] == xc2);
    // third literal (v3) false -> X = {A_1, F_1}
    std::vector<int> xc3{labels.clauses[0].A, labels.clauses[0].F};
    std::sort(xc3.begin(), xc3.end());
    CHECK(x.x_of[labels.c_sets[0][2]] == xc3);

    CHECK(verify_bipartition(red.instance, x).covered);
}

TEST_CASE("bipartition_to_assignment round trips and normalizes")
{
    auto phi = formula(4, {{1, -2, 3}, {2, 3, -4}});
    auto red = sat_to_bcc(phi);
    for (unsigned bits = 0; bits < 16; ++bits) {
        SatAssignment eval{{(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0,
                            (bits & 8) != 0}};
        if (!satisfies(phi, eval))
            continue;
        auto x = assignment_to_bipartition(phi, red.labels, eval);
        auto back = bipartition_to_assignment(red.instance, red.labels, x);
        CHECK(back.value == eval.value);

        // complementing some X(T) must not change the read-back
        auto flipped = x;
        for (size_t t = 0; t < flipped.x_of.size(); t += 2) {
            std::vector<int> comp;
            for (int v : red.instance.family[t])
                if (std::find(flipped.x_of[t].begin(), flipped.x_of[t].end(), v)
                    == flipped.x_of[t].end())
                    comp.push_back(v);
            flipped.x_of[t] = comp;
        }
        CHECK(bipartition_to_assignment(red.instance, red.labels, flipped).value == eval.value);
    }
}

TEST_CASE("solver-found bipartitionings lift to satisfying assignments")
{
    int seen = 0;
    for (unsigned seed = 0; seen < 8; ++seed) {
        auto phi = gen_random_3cnf(3, 2, 100 + seed);
        if (!brute_force_sat(phi))
            continue;
        ++seen;
        auto red = sat_to_bcc(phi);
        auto x = solve_bcc(red.instance);
        REQUIRE(x);
        auto eval = bipartition_to_assignment(red.instance, red.labels, *x);
        CHECK(satisfies(phi, eval));
    }
}

TEST_CASE("bcc_to_rc2 counts and split structure")
{
    BccInstance single;
    single.base = Graph::from_edges(2, {{0, 1}});
    single.family = {{0, 1}};
    auto red = bcc_to_rc2(single);
    // |A'| = |V| + |S| + |non-edges| = 2 + 1 + 0, |B'| = 2
    CHECK(red.graph.vertex_count() == 5);
    CHECK(red.labels.x.empty());

    BccInstance path;
    path.base = Graph::from_edges(3, {{0, 1}, {1, 2}});
    path.family = {{0, 1}, {1, 2}};
    auto red2 = bcc_to_rc2(path);
    CHECK(red2.labels.s.size() + red2.labels.x.size() + red2.labels.u_prime.size() == 6);
    CHECK(red2.labels.x.size() == 1);  // the single non-edge 0-2

    auto sp = recognize_split(red2.graph);
    REQUIRE(sp);
    // the clique side must contain all of A'
    std::vector<int> a_prime = red2.labels.u_prime;
    a_prime.insert(a_prime.end(), red2.labels.s.begin(), red2.labels.s.end());
    for (const auto& [e, xe] : red2.labels.x)
        a_prime.push_back(xe);
    for (int v : a_prime)
        CHECK(std::binary_search(sp->clique.begin(), sp->clique.end(), v));
}

TEST_CASE("bipartition_to_colouring assigns the gadget colours")
{
    BccInstance single;
    single.base = Graph::from_edges(2, {{0, 1}});
    single.family = {{0, 1}};
    auto red = bcc_to_rc2(single);
    Bipartitioning x{{{0}}};
    auto col = bipartition_to_colouring(single, red.graph, red.labels, x);
    CHECK(col.of(red.graph, red.labels.u[0], red.labels.s[0]) == kBlue);
    CHECK(col.of(red.graph, red.labels.u[1], red.labels.s[0]) == kRed);
    CHECK(col.of(red.graph, red.labels.u[0], red.labels.u_prime[0]) == kRed);
    CHECK(col.of(red.graph, red.labels.u_prime[0], red.labels.u_prime[1]) == kBlue);
    CHECK(verify_rainbow(red.graph, col).connected);

    // all-blue membership edges leave u_0, u_1 without a rainbow path
    EdgeColouring bad = col;
    bad.colour[red.graph.edge_index(red.labels.u[1], red.labels.s[0])] = kBlue;
    auto report = verify_rainbow(red.graph, bad);
    CHECK_FALSE(report.connected);
}

TEST_CASE("colouring_to_bipartition recovers a cover")
{
    BccInstance path;
    path.base = Graph::from_edges(3, {{0, 1}, {1, 2}});
    path.family = {{0, 1}, {1, 2}};
    auto red = bcc_to_rc2(path);
    auto x = solve_bcc(path);
    REQUIRE(x);
    auto col = bipartition_to_colouring(path, red.graph, red.labels, *x);
    REQUIRE(verify_rainbow(red.graph, col).connected);
    auto back = colouring_to_bipartition(path, red.graph, red.labels, col);
    CHECK(verify_bipartition(path, back).covered);

    // a solver-found rainbow colouring lifts too
    auto two = solve_rc2(red.graph);
    REQUIRE(two);
    auto lifted = colouring_to_bipartition(path, red.graph, red.labels, *two);
    CHECK(verify_bipartition(path, lifted).covered);

    EdgeColouring mono{2, std::vector<int>(red.graph.edge_count(), kBlue)};
    CHECK_THROWS_AS(colouring_to_bipartition(path, red.graph, red.labels, mono),
                    std::invalid_argument);
}

TEST_CASE("dimacs parser enforces the exactly-three-distinct rule")
{
    std::istringstream ok("c comment\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
    auto phi = parse_dimacs(ok);
    CHECK(phi.variables == 3);
    CHECK(phi.clauses.size() == 2);

    std::istringstream two_lits("p cnf 3 1\n1 -2 0\n");
    CHECK_THROWS_MATCHES(parse_dimacs(two_lits), parse_error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("line 2")));
    std::istringstream repeated("p cnf 3 1\n1 -1 2 0\n");
    CHECK_THROWS_AS(parse_dimacs(repeated), parse_error);
    std::istringstream range("p cnf 2 1\n1 2 3 0\n");
    CHECK_THROWS_AS(parse_dimacs(range), parse_error);
}

TEST_CASE("label files round trip")
{
    auto phi = gen_random_3cnf(4, 2, 9);
    auto red = sat_to_bcc(phi);
    std::ostringstream out;
    write_sat_labels(out, red.labels);
    std::istringstream in(out.str());
    auto labels = parse_sat_labels(in);
    CHECK(labels.vars.size() == red.labels.vars.size());
    for (size_t i = 0; i < labels.vars.size(); ++i) {
        CHECK(labels.vars[i].a == red.labels.vars[i].a);
        CHECK(labels.vars[i].t2 == red.labels.vars[i].t2);
    }
    CHECK(labels.c_sets == red.labels.c_sets);

    auto rc2 = bcc_to_rc2(red.instance);
    std::ostringstream rout;
    write_rc2_labels(rout, rc2.labels);
    std::istringstream rin(rout.str());
    auto rlabels = parse_rc2_labels(rin);
    CHECK(rlabels.base_n == rc2.labels.base_n);
    CHECK(rlabels.u == rc2.labels.u);
    CHECK(rlabels.u_prime == rc2.labels.u_prime);
    CHECK(rlabels.s == rc2.labels.s);
    CHECK(rlabels.x == rc2.labels.x);
}
