#pragma once

#include <random>

#include "rainbow/sat.hpp"
#include "rainbow/split.hpp"

namespace rainbow {

namespace detail {

// Deterministic bounded draws on top of mt19937. Plain modulo keeps the
// streams identical across standard libraries; bias is irrelevant here.
class Rng {
public:
    explicit Rng(unsigned seed) : engine_(seed) {}

    int below(int n) { return static_cast<int>(engine_() % static_cast<unsigned>(n)); }
    int between(int lo, int hi) { return lo + below(hi - lo + 1); }
    bool coin() { return (engine_() & 1u) != 0; }

    // k distinct values from 0..n-1, ascending.
    std::vector<int> sample(int n, int k)
    {
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i)
            pool[i] = i;
        for (int i = 0; i < k; ++i)
            std::swap(pool[i], pool[i + below(n - i)]);
        pool.resize(k);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

private:
    std::mt19937 engine_;
};

}  // namespace detail

/// Parameters for the special split-graph generators: clique size, number
/// of non-pendant independent vertices, and pendants beyond the case's own.
struct SpecialParams {
    int clique = 3;
    int i_prime = 0;
    int extra_pendants = 0;
};

enum class SpecialKind { G111, G400, G310, G2200, G220, G220z };

/// Seeded split graph containing the requested special host: the first
/// clique vertices carry the case's pendant distribution, the independent
/// extras attach to random clique pairs, and extra pendants (never for the
/// exceptional hosts) land on case-preserving clique vertices.
inline Graph gen_special(SpecialKind kind, const SpecialParams& params, unsigned seed)
{
    detail::Rng rng(seed);
    int q = params.clique;
    int min_clique = (kind == SpecialKind::G2200) ? 4 : 3;
    bool exceptional = kind == SpecialKind::G220 || kind == SpecialKind::G220z;
    if (q < min_clique || (exceptional && q != 3))
        throw std::invalid_argument("gen_special: clique size out of range for the case");

    std::vector<Edge> edges;
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b)
            edges.push_back({a, b});
    int next = q;
    auto pendant_on = [&](int x) { edges.push_back({x, next++}); };

    switch (kind) {
    case SpecialKind::G111:
        pendant_on(0);
        pendant_on(1);
        pendant_on(2);
        break;
    case SpecialKind::G400:
        for (int i = 0; i < 4; ++i)
            pendant_on(0);
        break;
    case SpecialKind::G310:
        for (int i = 0; i < 3; ++i)
            pendant_on(0);
        pendant_on(1);
        break;
    case SpecialKind::G2200:
    case SpecialKind::G220:
    case SpecialKind::G220z:
        pendant_on(0);
        pendant_on(0);
        pendant_on(1);
        pendant_on(1);
        break;
    }
    if (kind == SpecialKind::G220z) {
        int z = next++;
        edges.push_back({0, z});
        edges.push_back({1, z});
    }
    for (int i = 0; i < params.i_prime; ++i) {
        int v = next++;
        std::vector<int> nbrs;
        if (kind == SpecialKind::G220) {
            // Keep the host exceptional: nobody may see both bearers.
            nbrs = rng.coin() ? std::vector<int>{0, 2} : std::vector<int>{1, 2};
        } else {
            nbrs = rng.sample(q, rng.between(2, q));
        }
        for (int x : nbrs)
            edges.push_back({x, v});
    }
    if (params.extra_pendants > 0) {
        if (exceptional)
            throw std::invalid_argument("gen_special: extra pendants would change the case");
        for (int i = 0; i < params.extra_pendants; ++i) {
            // Case-preserving spots: G400/G310 keep the distribution shape by
            // loading x0; G111/G2200 tolerate any clique vertex.
            int x = (kind == SpecialKind::G400 || kind == SpecialKind::G310)
                        ? 0
                        : rng.below(q);
            pendant_on(x);
        }
    }
    return Graph::from_edges(next, std::move(edges));
}

/// Seeded connected split graph: a clique of random size and independent
/// vertices with random nonempty clique neighbourhoods.
inline Graph gen_random_split(int n, unsigned seed)
{
    if (n < 1)
        throw std::invalid_argument("gen_random_split: need at least one vertex");
    detail::Rng rng(seed);
    int q = rng.between(1, n);
    std::vector<Edge> edges;
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b)
            edges.push_back({a, b});
    for (int v = q; v < n; ++v)
        for (int x : rng.sample(q, rng.between(1, q)))
            edges.push_back({x, v});
    return Graph::from_edges(n, std::move(edges));
}

/// Seeded connected threshold graph, built by the usual vertex-addition
/// sequence (isolated or dominating); the last addition dominates so the
/// result is connected.
inline Graph gen_random_threshold(int n, unsigned seed)
{
    if (n < 1)
        throw std::invalid_argument("gen_random_threshold: need at least one vertex");
    detail::Rng rng(seed);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        bool dominating = (v == n - 1) || rng.coin();
        if (dominating)
            for (int w = 0; w < v; ++w)
                edges.push_back({w, v});
    }
    return Graph::from_edges(n, std::move(edges));
}

/// Seeded formula with exactly three distinct variables per clause.
inline CnfFormula gen_random_3cnf(int variables, int clause_count, unsigned seed)
{
    if (variables < 3)
        throw std::invalid_argument("gen_random_3cnf: need at least three variables");
    detail::Rng rng(seed);
    CnfFormula formula;
    formula.variables = variables;
    for (int j = 0; j < clause_count; ++j) {
        auto vars = rng.sample(variables, 3);
        std::array<int, 3> clause{};
        for (int k = 0; k < 3; ++k)
            clause[k] = (rng.coin() ? 1 : -1) * (vars[k] + 1);
        formula.clauses.push_back(clause);
    }
    return formula;
}

}  // namespace rainbow
