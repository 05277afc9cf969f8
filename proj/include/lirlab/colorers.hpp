#pragma once

#include <optional>
#include <vector>

#include "lirlab/families.hpp"
#include "lirlab/multigraph.hpp"
#include "lirlab/solver.hpp"

namespace lir {

// Plan assembly by vertex pairs, so colorers need not track bundle ids.
struct PlanEdge {
    int u;
    int v;
    Color color;
    bool doubled = false;
};
DoublingPlan make_plan(int n, const std::vector<PlanEdge>& edges);
std::vector<PlanEdge> plan_edges(const DoublingPlan& p);

// Throws if the plan does not verify; returns it otherwise.
DoublingPlan checked(DoublingPlan p, const char* who);

DoublingPlan color_path(int n);
DoublingPlan color_cycle(int n);

// Exact 2-liec of a tree by dynamic programming over (vertex, parent edge
// color, parent degree in that color); empty when none exists.
std::optional<EdgeColoring> tree_2liec(const Multigraph& tree);
EdgeColoring two_aliec_shrub(const Multigraph& tree, int root);
DoublingPlan color_tree(const Multigraph& tree);

DoublingPlan color_complete(int n);
DoublingPlan color_complete_multipartite(const std::vector<int>& sizes);

// Pendant-only split profiles that need one doubled edge.
bool split_in_exception_list(const SplitProfile& p);
DoublingPlan color_split(const SplitProfile& p, const SolveBudget& fallback = {});

DoublingPlan color_special_cactus(const TauStarScript& script);

// Dispatch on a family spec; families without a construction fall back to
// the exact solver under `fallback`.
DoublingPlan color_family(const FamilySpec& s, const SolveBudget& fallback = {});

}  // namespace lir
