#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lirlab/multigraph.hpp"

namespace lir {

struct SolveBudget {
    int max_colors = 6;
    int max_doublings = 3;
    std::uint64_t node_limit = 4'000'000'000ULL;  // per 2-liec search
    double seconds = 3600.0;                      // wall time for the whole call
};

enum class SolveStatus { Found, ExhaustedNoSolution, BudgetExceeded };

std::string to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::ExhaustedNoSolution;
    int value = -1;
    std::vector<int> coloring;             // exact_lir certificate: color index per bundle
    std::optional<DoublingPlan> plan;      // exact_D_lir certificate
    std::uint64_t nodes = 0;
};

enum class Parallelism { Serial, OpenMP };

struct TwoLiecResult {
    SolveStatus status = SolveStatus::ExhaustedNoSolution;
    std::optional<EdgeColoring> coloring;
    std::uint64_t nodes = 0;
};

// Hooks for long runs: the root level of the search is split into numbered
// branches; skip() lets a caller resume, done() lets it record progress.
struct BranchHooks {
    std::function<bool(int)> skip;
    std::function<void(int)> done;
};

TwoLiecResult search_2liec(const Multigraph& m, const SolveBudget& budget = {}, const BranchHooks* hooks = nullptr);
std::optional<EdgeColoring> exists_2liec(const Multigraph& m, const SolveBudget& budget = {});

// Smallest c <= max_colors admitting a c-liec.
SolveResult exact_lir(const Multigraph& g, const SolveBudget& budget = {});

// Orbit representatives of s-subsets of the edges of a simple graph under
// its automorphism group, in a deterministic order.
std::vector<std::vector<int>> doubling_orbits(const Multigraph& g, int s,
                                              const std::vector<std::vector<int>>* previous = nullptr);

SolveResult exact_D_lir(const Multigraph& g, const SolveBudget& budget = {},
                        Parallelism par = Parallelism::OpenMP);

// Long run for the complete-graph lower bound: proves that no doubling set
// of size < target admits a 2-liec, checkpointing finished root branches.
struct CheckpointRun {
    SolveStatus status = SolveStatus::ExhaustedNoSolution;
    int branches_total = 0;
    int branches_done = 0;
};
CheckpointRun prove_doubling_lower_bound(const Multigraph& g, int target, const std::string& checkpoint_path,
                                         const SolveBudget& budget = {});

// Lower bound for members of 𝔗: pendant triangles whose vertices all have
// degree three.
int pendant_triangle_bound(const Multigraph& g);

// Canonical form of a (multi)graph: equal iff isomorphic.
std::string canonical_form(const Multigraph& g);

// All connected simple graphs on n vertices up to isomorphism.
std::vector<Multigraph> connected_graphs(int n);

}  // namespace lir
