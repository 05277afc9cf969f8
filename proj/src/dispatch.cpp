#include <algorithm>
#include <numeric>

#include "lirlab/colorers.hpp"
#include "lirlab/power_cycle.hpp"

namespace lir {

namespace {

DoublingPlan by_solver(const Multigraph& g, const SolveBudget& budget) {
    auto r = exact_D_lir(g, budget);
    if (r.status == SolveStatus::BudgetExceeded) throw BudgetExceeded("solver budget exhausted");
    if (r.status != SolveStatus::Found) throw Error("no plan within the doubling limit");
    return *r.plan;
}

// Colors the parts in non-increasing order, then maps the vertices back to
// the order the generator uses.
DoublingPlan multipartite_any_order(const std::vector<int>& sizes) {
    int k = static_cast<int>(sizes.size());
    if (std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 1; })) return color_complete(k);
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sizes[a] > sizes[b]; });
    std::vector<int> start(k + 1, 0), sorted;
    for (int i = 0; i < k; ++i) start[i + 1] = start[i] + sizes[i];
    for (int i : order) sorted.push_back(sizes[i]);
    std::vector<int> back;  // sorted position -> generator vertex
    for (int i : order)
        for (int v = start[i]; v < start[i + 1]; ++v) back.push_back(v);
    auto e = plan_edges(color_complete_multipartite(sorted));
    for (auto& x : e) {
        x.u = back[x.u];
        x.v = back[x.v];
    }
    return checked(make_plan(start[k], e), "color_complete_multipartite");
}

}  // namespace

DoublingPlan color_family(const FamilySpec& s, const SolveBudget& fallback) {
    return std::visit(
        [&](const auto& x) -> DoublingPlan {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, spec::Path>) return color_path(x.n);
            if constexpr (std::is_same_v<T, spec::Cycle>) return color_cycle(x.n);
            if constexpr (std::is_same_v<T, spec::Complete>) return color_complete(x.n);
            if constexpr (std::is_same_v<T, spec::CompleteMultipartite>) return multipartite_any_order(x.sizes);
            if constexpr (std::is_same_v<T, spec::PowerOfCycle>) return color_power_of_cycle(x.n, x.k);
            if constexpr (std::is_same_v<T, spec::Split>) return color_split(x.profile, fallback);
            if constexpr (std::is_same_v<T, spec::Bowtie>) return by_solver(generate(s), fallback);
            if constexpr (std::is_same_v<T, spec::AlmostIrregular>) return by_solver(generate(s), fallback);
            if constexpr (std::is_same_v<T, spec::TauStar>) {
                if (x.script.steps.empty()) return color_cycle(x.script.base);
                return color_special_cactus(x.script);
            }
            if constexpr (std::is_same_v<T, spec::TriangleChain>) return color_special_cactus(triangle_chain_script(x.m));
            if constexpr (std::is_same_v<T, spec::EighthGadget>) return checked(eighth_gadget(x.m).plan, "eighth_gadget");
        },
        s);
}

}  // namespace lir
