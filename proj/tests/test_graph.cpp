#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "rainbow/generate.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/split.hpp"

#include "oracles.hpp"

using namespace rainbow;

namespace {

Graph path_graph(int n)
{
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.push_back({v, v + 1});
    return Graph::from_edges(n, std::move(edges));
}

Graph cycle_graph(int n)
{
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        edges.push_back({v, (v + 1) % n});
    return Graph::from_edges(n, std::move(edges));
}

Graph star_graph(int leaves)
{
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v)
        edges.push_back({0, v});
    return Graph::from_edges(leaves + 1, std::move(edges));
}

}  // namespace

TEST_CASE("graph construction rejects malformed input")
{
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("structural queries on small graphs")
{
    Graph p4 = path_graph(4);
    CHECK(diameter(p4) == 3);
    CHECK(bridges(p4).size() == 3);
    CHECK(pendant_set(p4) == std::vector<int>{0, 3});

    Graph c6 = cycle_graph(6);
    CHECK(diameter(c6) == 3);
    CHECK(bridges(c6).empty());
    CHECK(pendant_set(c6).empty());

    Graph star = star_graph(3);
    CHECK(pendant_set(star) == std::vector<int>{1, 2, 3});

    Graph triangle = cycle_graph(3);
    CHECK(pendant_set(triangle).empty());
    CHECK(is_complete(triangle));
    CHECK(diameter(triangle) == 1);

    Graph disconnected = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(disconnected));
    CHECK_THROWS_AS(diameter(disconnected), std::invalid_argument);
    CHECK_THROWS_AS(distance(disconnected, 0, 2), std::invalid_argument);
    CHECK(distance(disconnected, 0, 1) == 1);
}

TEST_CASE("G310 host has four pendants")
{
    auto g = gen_special(SpecialKind::G310, {3, 0, 0}, 1);
    CHECK(pendant_set(g).size() == 4);
}

TEST_CASE("bridges contain every pendant edge")
{
    for (unsigned seed = 0; seed < 40; ++seed) {
        auto g = gen_random_split(3 + seed % 12, seed);
        auto bs = bridges(g);
        for (int y : pendant_set(g)) {
            Edge e = make_edge(y, g.neighbours(y)[0]);
            CHECK(std::find(bs.begin(), bs.end(), e) != bs.end());
        }
    }
}

TEST_CASE("split recognition matches the exhaustive oracle")
{
    for (int n = 1; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            Graph g = testutil::graph_from_mask(n, mask);
            CAPTURE(n, mask);
            CHECK(recognize_split(g).has_value() == testutil::exhaustive_split(g));
        }
    }
    // spot checks at larger sizes
    detail::Rng rng(99);
    for (int trial = 0; trial < 3000; ++trial) {
        int n = 6 + trial % 3;
        int pairs = n * (n - 1) / 2;
        unsigned mask = 0;
        for (int b = 0; b < pairs; ++b)
            if (rng.coin())
                mask |= (1u << b);
        Graph g = testutil::graph_from_mask(n, mask);
        CAPTURE(n, mask);
        CHECK(recognize_split(g).has_value() == testutil::exhaustive_split(g));
    }
}

TEST_CASE("split partitions satisfy their invariants")
{
    auto check_partition = [](const Graph& g, const SplitPartition& sp) {
        CHECK(sp.clique.size() + sp.independent.size() == static_cast<size_t>(g.vertex_count()));
        for (int a : sp.clique)
            for (int b : sp.clique)
                if (a < b)
                    CHECK(g.adjacent(a, b));
        for (int a : sp.independent)
            for (int b : sp.independent)
                if (a < b)
                    CHECK_FALSE(g.adjacent(a, b));
        // maximality: no independent vertex adjacent to the whole clique
        for (int v : sp.independent) {
            bool all = true;
            for (int u : sp.clique)
                if (!g.adjacent(u, v))
                    all = false;
            CHECK_FALSE(all);
        }
    };
    for (unsigned seed = 0; seed < 60; ++seed) {
        auto g = gen_random_split(4 + seed % 20, seed);
        auto sp = recognize_split(g);
        REQUIRE(sp);
        check_partition(g, *sp);
    }
}

TEST_CASE("spec recognition examples")
{
    Graph p3 = path_graph(3);
    auto sp = recognize_split(p3);
    REQUIRE(sp);
    CHECK(sp->clique.size() == 2);
    CHECK(sp->independent.size() == 1);

    CHECK_FALSE(recognize_split(cycle_graph(4)));
    CHECK(testutil::exhaustive_split(cycle_graph(4)) == false);

    auto g400 = gen_special(SpecialKind::G400, {3, 0, 0}, 1);
    auto sp400 = recognize_split(g400);
    REQUIRE(sp400);
    CHECK(sp400->clique == std::vector<int>{0, 1, 2});
    CHECK(sp400->independent.size() == 4);
}

TEST_CASE("pendants of a connected non-tree split graph sit in I with clique neighbours")
{
    for (unsigned seed = 0; seed < 60; ++seed) {
        auto g = gen_random_split(5 + seed % 25, 1000 + seed);
        if (is_tree(g))
            continue;
        auto sp = recognize_split(g);
        REQUIRE(sp);
        std::vector<bool> in_clique(g.vertex_count(), false);
        for (int v : sp->clique)
            in_clique[v] = true;
        if (sp->clique.size() < 3)
            continue;
        for (int y : pendant_set(g)) {
            CHECK_FALSE(in_clique[y]);
            CHECK(in_clique[g.neighbours(y)[0]]);
        }
    }
}

TEST_CASE("threshold recognition matches the induced-P4 characterization")
{
    for (int n = 2; n <= 6; ++n) {
        int pairs = n * (n - 1) / 2;
        unsigned step = n == 6 ? 7 : 1;  // sample every 7th mask at n=6
        for (unsigned mask = 0; mask < (1u << pairs); mask += step) {
            Graph g = testutil::graph_from_mask(n, mask);
            bool expected = testutil::exhaustive_split(g) && !testutil::has_induced_p4(g);
            CAPTURE(n, mask);
            CHECK(is_threshold(g) == expected);
        }
    }
}

TEST_CASE("spec threshold examples")
{
    CHECK(is_threshold(star_graph(3)));
    CHECK_FALSE(is_threshold(path_graph(4)));
    CHECK(is_threshold(cycle_graph(3)));
    Graph k5 = testutil::graph_from_mask(5, (1u << 10) - 1);
    CHECK(is_threshold(k5));
}

TEST_CASE("generated threshold graphs are threshold and connected")
{
    for (unsigned seed = 0; seed < 50; ++seed) {
        auto g = gen_random_threshold(2 + seed % 8, seed);
        CHECK(is_connected(g));
        CHECK(is_threshold(g));
    }
}

TEST_CASE("split graphs have diameter at most three")
{
    for (unsigned seed = 0; seed < 80; ++seed) {
        auto g = gen_random_split(3 + seed % 30, 77 * seed + 5);
        REQUIRE(is_connected(g));
        CHECK(diameter(g) <= 3);
    }
}

TEST_CASE("edge list format round trip and diagnostics")
{
    auto g = gen_random_split(12, 4);
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream in(out.str());
    CHECK(parse_graph(in) == g);

    std::istringstream bad_header("x y\n");
    CHECK_THROWS_MATCHES(parse_graph(bad_header), parse_error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("line 1")));
    std::istringstream bad_edge("2 1\n0 zero\n");
    CHECK_THROWS_MATCHES(parse_graph(bad_edge), parse_error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("line 2")));
    std::istringstream missing("2 2\n0 1\n");
    CHECK_THROWS_AS(parse_graph(missing), parse_error);
    std::istringstream comments("# header\n3 1 # n m\n0 1\n\n");
    CHECK(parse_graph(comments).edge_count() == 1);
}

TEST_CASE("induced subgraph keeps ids consistent")
{
    auto g = gen_special(SpecialKind::G400, {4, 2, 1}, 3);
    std::vector<bool> keep(g.vertex_count(), true);
    keep[4] = false;
    auto ind = induced_subgraph(g, keep);
    CHECK(ind.graph.vertex_count() == g.vertex_count() - 1);
    for (auto [u, v] : ind.graph.edges())
        CHECK(g.adjacent(ind.to_old[u], ind.to_old[v]));
    for (auto [u, v] : g.edges())
        if (keep[u] && keep[v])
            CHECK(ind.graph.adjacent(ind.to_new[u], ind.to_new[v]));
}
