#pragma once

#include <optional>
#include <vector>

namespace rainbow {
namespace detail {

/// Union-find over binary variables with edge parities, so that "x equals y"
/// and "x differs from y" are both mergeable facts. No path compression;
/// unions are undoable via a trail, which the backtracking solvers rely on.
class ParityDsu {
public:
    explicit ParityDsu(int n) : parent_(n), parity_(n, 0), size_(n, 1)
    {
        for (int i = 0; i < n; ++i)
            parent_[i] = i;
    }

    // (root, parity of v relative to root)
    std::pair<int, int> find(int v) const
    {
        int p = 0;
        while (parent_[v] != v) {
            p ^= parity_[v];
            v = parent_[v];
        }
        return {v, p};
    }

    // Records "value(a) xor value(b) == diff". Returns false on contradiction.
    bool merge(int a, int b, int diff)
    {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb)
            return (pa ^ pb) == diff;
        if (size_[ra] < size_[rb]) {
            std::swap(ra, rb);
            std::swap(pa, pb);
        }
        parent_[rb] = ra;
        parity_[rb] = pa ^ pb ^ diff;
        size_[ra] += size_[rb];
        trail_.push_back(rb);
        return true;
    }

    // Relation between two variables: 0 equal, 1 different, -1 unrelated.
    int relation(int a, int b) const
    {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra != rb)
            return -1;
        return pa ^ pb;
    }

    size_t mark() const { return trail_.size(); }

    void rollback(size_t mark)
    {
        while (trail_.size() > mark) {
            int rb = trail_.back();
            trail_.pop_back();
            size_[parent_[rb]] -= size_[rb];
            parent_[rb] = rb;
            parity_[rb] = 0;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> parity_;
    std::vector<int> size_;
    std::vector<int> trail_;
};

}  // namespace detail

/// A two-colouring constraint system: binary variables, and for each pair a
/// disjunction of witnesses (v1, v2) of which at least one must take
/// different values. This is the common core of the 2-colour rainbow
/// solvers: a pair of vertices at distance two is separated exactly when
/// some common neighbour's two edges get different colours.
struct SeparationProblem {
    int var_count = 0;
    std::vector<std::vector<std::pair<int, int>>> pairs;
};

/// Backtracking with propagation: a pair whose witnesses are all refuted is
/// a conflict; a pair with exactly one live witness forces that witness's
/// inequality. Branching picks an undecided witness and tries both sides.
/// Variable 0 is pinned to value 0, which is sound under the global colour
/// swap. Returns one satisfying 0/1 assignment, or nothing.
inline std::optional<std::vector<int>> solve_separation(const SeparationProblem& problem)
{
    const int kTrue = problem.var_count;  // virtual constant-0 anchor node
    detail::ParityDsu dsu(problem.var_count + 1);
    if (problem.var_count > 0)
        dsu.merge(0, kTrue, 0);

    // -1 conflict; otherwise the index of a pair with >= 2 live witnesses,
    // or a pairs.size() sentinel when everything is decided.
    auto propagate = [&]() -> int {
        bool again = true;
        int branch_pair = -1;
        while (again) {
            again = false;
            branch_pair = -1;
            for (size_t p = 0; p < problem.pairs.size(); ++p) {
                const auto& witnesses = problem.pairs[p];
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
                    return -1;
                if (live == 1) {
                    if (!dsu.merge(unit.first, unit.second, 1))
                        return -1;
                    again = true;
                } else if (branch_pair < 0) {
                    branch_pair = static_cast<int>(p);
                }
            }
        }
        return branch_pair < 0 ? static_cast<int>(problem.pairs.size()) : branch_pair;
    };

    auto search = [&](auto&& self) -> bool {
        int state = propagate();
        if (state == -1)
            return false;
        if (state == static_cast<int>(problem.pairs.size()))
            return true;
        // First live witness of the chosen pair: satisfy it or refute it.
        for (auto [a, b] : problem.pairs[state]) {
            if (dsu.relation(a, b) != -1)
                continue;
            for (int diff : {1, 0}) {
                size_t mark = dsu.mark();
                if (dsu.merge(a, b, diff) && self(self))
                    return true;
                dsu.rollback(mark);
            }
            return false;
        }
        return false;
    };

    if (!search(search))
        return std::nullopt;
    std::vector<int> values(problem.var_count, 0);
    auto [troot, tpar] = dsu.find(kTrue);
    for (int v = 0; v < problem.var_count; ++v) {
        auto [r, p] = dsu.find(v);
        values[v] = (r == troot) ? (p ^ tpar) : p;
    }
    return values;
}

}  // namespace rainbow
