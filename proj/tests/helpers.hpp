#pragma once

#include <random>
#include <set>
#include <vector>

#include "lirlab/colorers.hpp"
#include "lirlab/families.hpp"
#include "lirlab/multigraph.hpp"
#include "lirlab/solver.hpp"

namespace testing_util {

inline lir::Multigraph random_connected(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    auto tree = lir::random_tree(n, rng);
    std::set<std::pair<int, int>> e;
    for (const auto& b : tree.bundles()) e.insert({b.u, b.v});
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) e.insert({u, v});
    return lir::simple_graph(n, {e.begin(), e.end()});
}

// Doubled edges pairwise disjoint and none of them pendant.
inline bool independent_nonpendant(const lir::DoublingPlan& p) {
    std::set<int> seen;
    for (int id : p.doubled) {
        auto b = p.base.bundle(id);
        if (p.base.degree(b.u) == 1 || p.base.degree(b.v) == 1) return false;
        if (!seen.insert(b.u).second || !seen.insert(b.v).second) return false;
    }
    return true;
}

inline lir::SolveBudget small_budget(int doublings = 3) {
    lir::SolveBudget b;
    b.max_doublings = doublings;
    return b;
}

}  // namespace testing_util
