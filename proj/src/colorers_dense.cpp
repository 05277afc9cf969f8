#include <algorithm>
#include <numeric>

#include "lirlab/colorers.hpp"
#include "lirlab/fixtures.hpp"

namespace lir {

namespace {

DoublingPlan add_apex(const DoublingPlan& p, Color c) {
    auto e = plan_edges(p);
    int n = p.base.n();
    for (int v = 0; v < n; ++v) e.push_back({v, n, c});
    return make_plan(n + 1, e);
}

std::vector<PlanEdge> swap_colors(std::vector<PlanEdge> e) {
    for (auto& x : e) x.color = other(x.color);
    return e;
}

// Permutation of 0..n-1 sending a to 0 and b (if >= 0) to 1, others in order.
std::vector<int> front_perm(int n, int a, int b) {
    std::vector<int> p(n, -1);
    p[a] = 0;
    int next = 1;
    if (b >= 0) {
        p[b] = 1;
        next = 2;
    }
    for (int v = 0; v < n; ++v)
        if (p[v] < 0) p[v] = next++;
    return p;
}

std::vector<PlanEdge> relabel(std::vector<PlanEdge> e, const std::vector<int>& p) {
    for (auto& x : e) {
        if (x.u < static_cast<int>(p.size())) x.u = p[x.u];
        if (x.v < static_cast<int>(p.size())) x.v = p[x.v];
    }
    return e;
}

}  // namespace

DoublingPlan color_complete(int n) {
    if (n < 4) throw Error("color_complete needs n >= 4");
    auto fixture_plan = [](const char* name) { return load_fixture(name).plan; };
    switch (n) {
        case 4: return checked(fixture_plan("fig4_k4"), "color_complete");
        case 6: return checked(fixture_plan("fig4_k6"), "color_complete");
        case 8: return checked(fixture_plan("fig4_k8"), "color_complete");
        case 9: return checked(fixture_plan("fig4_k9"), "color_complete");
        case 11: return checked(fixture_plan("fig5_k11"), "color_complete");
        case 5:
        case 7:
        case 10: return checked(add_apex(color_complete(n - 1), Color::Blue), "color_complete");
        default: break;
    }
    auto p = fixture_plan("fig5_k11");
    for (int m = 12; m <= n; ++m) p = add_apex(p, m % 2 == 0 ? Color::Red : Color::Blue);
    return checked(p, "color_complete");
}

DoublingPlan color_complete_multipartite(const std::vector<int>& sizes) {
    int k = static_cast<int>(sizes.size());
    if (k < 2) throw Error("multipartite coloring needs at least two parts");
    for (int i = 0; i < k; ++i) {
        if (sizes[i] < 1) throw Error("part sizes must be positive");
        if (i > 0 && sizes[i] > sizes[i - 1]) throw Error("part sizes must be non-increasing");
    }
    if (sizes[0] == 1) throw Error("all parts of size one: use color_complete");
    std::vector<int> start(k + 1, 0);
    for (int i = 0; i < k; ++i) start[i + 1] = start[i] + sizes[i];
    std::vector<PlanEdge> e;
    auto join = [&](int a, int b, auto color_of) {
        for (int u = start[a]; u < start[a + 1]; ++u)
            for (int v = start[b]; v < start[b + 1]; ++v) e.push_back({u, v, color_of(u, v)});
    };
    auto fixed = [](Color c) { return [c](int, int) { return c; }; };
    const Color R = Color::Red, B = Color::Blue;
    if (k == 2) {
        if (sizes[0] > sizes[1]) {
            join(0, 1, fixed(R));
        } else {
            // edges at a half-sized subset of the first part blue
            int s = (sizes[0] + 1) / 2;
            join(0, 1, [&](int u, int) { return u < s ? B : R; });
        }
        return checked(make_plan(start[k], e), "color_complete_multipartite");
    }
    int n1 = sizes[0], n2 = sizes[1], n3 = sizes[2];
    if (n1 > n2 && n2 > n3) {
        join(0, 1, fixed(R));
        join(0, 2, fixed(R));
        join(1, 2, fixed(R));
    } else if (n1 == n2 && n2 > n3) {
        join(0, 1, fixed(R));
        join(0, 2, fixed(B));
        join(1, 2, fixed(R));
    } else if (n1 > n2 && n2 == n3) {
        join(0, 1, fixed(B));
        join(0, 2, fixed(R));
        join(1, 2, fixed(R));
    } else {
        // all equal: A1-A2 blue plus a perfect matching between A1 and A3
        join(0, 1, fixed(B));
        join(0, 2, [&](int u, int v) { return u - start[0] == v - start[2] ? B : R; });
        join(1, 2, fixed(R));
    }
    for (int j = 3; j < k; ++j)
        for (int i = 0; i < j; ++i) join(i, j, fixed((j + 1) % 2 == 0 ? B : R));
    return checked(make_plan(start[k], e), "color_complete_multipartite");
}

bool split_in_exception_list(const SplitProfile& p) {
    int n = p.n;
    auto d = [&](int i) { return i < static_cast<int>(p.d.size()) ? p.d[i] : 0; };
    if (n == 2 && d(0) == 1 && d(1) == 1 && !p.shared) return true;
    if (d(1) == 0) {
        int d1 = d(0);
        if (n >= 4 && n <= 10 && d1 == 1) return true;
        if (n >= 6 && n <= 10 && d1 == 2) return true;
        if (n >= 8 && n <= 10 && d1 == 3) return true;
        if (n == 10 && d1 == 4) return true;
        if (n >= 11 && d1 >= 1 && d1 < n / 2) return true;
    }
    if (n >= 6 && n <= 8 && d(0) == 1 && d(1) == 1 && d(2) == 0) return true;
    return false;
}

namespace {

// Connected almost irregular graph on the clique minus v1 carries the red
// edges; v1 joins one of the twins and every vertex above the repeated
// degree in red; its pendants are red for even n and blue for odd n.
std::optional<DoublingPlan> split_almost_irregular(const SplitProfile& p) {
    int n = p.n, d1 = p.d[0];
    if (n < 3 || p.shared || (n > 1 && p.d[1] != 0)) return std::nullopt;
    int t = n - 1, m = t / 2;
    auto h = almost_irregular(t, true);
    auto hd = h.degrees();
    std::vector<PlanEdge> e;
    for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b) e.push_back({a + 1, b + 1, h.adjacent(a, b) ? Color::Red : Color::Blue});
    bool twin_joined = false;
    for (int a = 0; a < t; ++a) {
        bool red = hd[a] > m;
        if (hd[a] == m && !twin_joined) red = twin_joined = true;
        e.push_back({0, a + 1, red ? Color::Red : Color::Blue});
    }
    Color pc = n % 2 == 0 ? Color::Red : Color::Blue;
    for (int i = 0; i < d1; ++i) e.push_back({0, n + i, pc});
    auto plan = make_plan(n + d1, e);
    if (!verify_plan(plan).ok) return std::nullopt;
    return plan;
}

std::optional<DoublingPlan> first_verified(const std::vector<std::vector<PlanEdge>>& cands, int n,
                                           const Multigraph& target) {
    for (const auto& c : cands) {
        auto plan = make_plan(n, c);
        if (plan.base == target && verify_plan(plan).ok) return plan;
    }
    return std::nullopt;
}

std::optional<DoublingPlan> split_from_complete(const SplitProfile& p, const Multigraph& target) {
    int n = p.n, d1 = p.d[0];
    int total = target.n();
    auto base = plan_edges(color_complete(n));
    std::vector<std::vector<PlanEdge>> cands;
    for (bool swap : {false, true}) {
        auto es = swap ? swap_colors(base) : base;
        if (p.d[1] == 0 && (n <= 5 || n >= 11)) {
            // attach red pendants at a vertex of largest red degree
            std::vector<int> red(n, 0);
            for (const auto& x : es)
                if (x.color == Color::Red) {
                    red[x.u] += x.doubled ? 2 : 1;
                    red[x.v] += x.doubled ? 2 : 1;
                }
            std::vector<int> byred(n);
            std::iota(byred.begin(), byred.end(), 0);
            std::stable_sort(byred.begin(), byred.end(), [&](int a, int b) { return red[a] > red[b]; });
            for (int v1 : byred) {
                auto c = relabel(es, front_perm(n, v1, -1));
                for (int i = 0; i < d1; ++i) c.push_back({0, n + i, Color::Red});
                cands.push_back(c);
            }
            continue;
        }
        // replace a doubled red pair by a single red edge, then pendants
        for (size_t i = 0; i < es.size(); ++i) {
            if (!es[i].doubled || es[i].color != Color::Red) continue;
            for (int side = 0; side < 2; ++side) {
                int v1 = side ? es[i].v : es[i].u, v2 = side ? es[i].u : es[i].v;
                auto c = es;
                c[i].doubled = false;
                c = relabel(c, front_perm(n, v1, v2));
                if (p.d[1] == 0) {
                    for (int r = 0; r < d1; ++r) c.push_back({0, n + r, Color::Red});
                } else if (p.shared) {
                    c.push_back({0, n, Color::Red});
                    c.push_back({1, n, Color::Red});
                } else {
                    c.push_back({0, n, Color::Red});
                    c.push_back({1, n + 1, Color::Red});
                }
                cands.push_back(c);
            }
        }
    }
    return first_verified(cands, total, target);
}

}  // namespace

DoublingPlan color_split(const SplitProfile& p, const SolveBudget& fallback) {
    auto g = split_graph(p);
    if (p.n < 2 || p.d.empty() || p.d[0] == 0) throw Error("split profile describes a complete graph");
    if (!split_in_exception_list(p)) {
        if (auto plan = split_almost_irregular(p)) return *plan;
        auto r = search_2liec(g, fallback);
        if (r.coloring) return checked(DoublingPlan{g, {}, *r.coloring}, "color_split");
    } else {
        if (p.n == 2) {
            // the path x-0-1-y
            auto path = plan_edges(color_path(4));
            std::vector<int> to{2, 0, 1, 3};
            return checked(make_plan(4, relabel(path, to)), "color_split");
        }
        if (p.n == 8 && p.d[1] == 0 && p.d[0] <= 3) {
            auto f = load_fixture("fig6_split8_d" + std::to_string(p.d[0]));
            auto e = plan_edges(f.plan);
            if (p.d[0] == 1) e = relabel(e, front_perm(8, 1, 0));
            auto plan = make_plan(g.n(), e);
            if (plan.base != g) throw Error("split fixture does not match the generated graph");
            return checked(plan, "color_split");
        }
        if (auto plan = split_from_complete(p, g)) return *plan;
    }
    auto r = exact_D_lir(g, fallback);
    if (r.status == SolveStatus::BudgetExceeded) throw BudgetExceeded("color_split: solver budget exhausted");
    if (r.status != SolveStatus::Found) throw Error("color_split: no plan within the doubling limit");
    return *r.plan;
}

}  // namespace lir
