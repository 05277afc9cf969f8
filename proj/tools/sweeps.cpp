#include "sweeps.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "lirlab/colorers.hpp"
#include "lirlab/fixtures.hpp"
#include "lirlab/power_cycle.hpp"
#include "reference.hpp"

namespace lir {

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void fail(const std::string& what) {
        if (ok) note << what;
        ok = false;
    }
};

SolveBudget doublings(int d) {
    SolveBudget b;
    b.max_doublings = d;
    return b;
}

// Doubled edges pairwise disjoint and none of them pendant.
bool independent_nonpendant(const DoublingPlan& p) {
    std::set<int> seen;
    for (int id : p.doubled) {
        auto b = p.base.bundle(id);
        if (p.base.degree(b.u) == 1 || p.base.degree(b.v) == 1) return false;
        if (!seen.insert(b.u).second || !seen.insert(b.v).second) return false;
    }
    return true;
}


void paths(Outcome& o, std::uint64_t) {
    for (int n = 3; n <= 5000; ++n) {
        auto p = color_path(n);
        if (p.doublings() != (n % 2 ? 0 : 1) || !verify_plan(p).ok) return o.fail("path " + std::to_string(n));
    }
    o.note << "n = 3..5000";
}

void cycles(Outcome& o, std::uint64_t) {
    const int cyc[4] = {0, 1, 2, 2};
    // C3 stays uncolorable under any doubling, so the table starts at 4
    for (int n = 4; n <= 5000; ++n) {
        auto c = color_cycle(n);
        if (c.doublings() != cyc[n % 4] || !verify_plan(c).ok) return o.fail("cycle " + std::to_string(n));
    }
    o.note << "n = 4..5000";
}

void trees(Outcome& o, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> nd(3, 60);
    int small = 0;
    for (int i = 0; i < 1000; ++i) {
        auto t = random_tree(nd(rng), rng);
        auto p = color_tree(t);
        if (p.doublings() > 1 || !verify_plan(p).ok) return o.fail("tree " + std::to_string(i));
        if (t.n() <= 12) {
            auto r = exact_D_lir(t);
            if (r.status != SolveStatus::Found || r.value != p.doublings()) return o.fail("tree solver " + std::to_string(i));
            ++small;
        }
    }
    o.note << "1000 trees, " << small << " cross-checked by the solver";
}

void complete(Outcome& o, std::uint64_t) {
    for (int n = 4; n <= 30; ++n) {
        auto p = color_complete(n);
        if (p.doublings() != (n >= 6 && n <= 10 ? 2 : 1) || !verify_plan(p).ok) return o.fail("K" + std::to_string(n));
    }
    for (int n = 6; n <= 10; ++n) {
        auto r = exact_D_lir(complete_graph(n), doublings(1));
        if (r.status != SolveStatus::ExhaustedNoSolution) return o.fail("lower bound K" + std::to_string(n));
    }
    o.note << "plans K4..K30; one doubling refuted for K6..K10";
}

void bowtie_lir(Outcome& o, std::uint64_t) {
    auto g = bowtie();
    auto r = exact_lir(g);
    if (r.status != SolveStatus::Found || r.value != 4 || !ref::naive_is_liec(g, r.coloring)) return o.fail("lir");
    SolveBudget three;
    three.max_colors = 3;
    if (exact_lir(g, three).status != SolveStatus::ExhaustedNoSolution) return o.fail("3 colors");
    o.note << "lir = 4 with certificate";
}

void powers(Outcome& o, std::uint64_t) {
    int count = 0;
    for (int k = 2; k <= 10; ++k)
        for (int n = 2 * k + 2; n <= 200; ++n) {
            auto p = color_power_of_cycle(n, k);
            std::string tag = "C" + std::to_string(n) + "^" + std::to_string(k);
            if (p.doublings() != 0 || !verify_plan(p).ok || p.base != power_of_cycle(n, k)) return o.fail(tag);
            // adjacency within distance k; equal blue degrees at distance >= k+1
            auto d = color_degrees(p.base, p.coloring);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    int dist = cyclic_distance(n, u, v);
                    if (p.base.adjacent(u, v) && dist > k) return o.fail(tag + " adjacency");
                    if (d[u].blue == d[v].blue && dist < k + 1) return o.fail(tag + " blue degrees");
                }
            if (!(n == 11 && k == 3)) {
                auto pr = choose_parameters(n, k);
                if (!assembly_distances_ok(assemble_blue(pr), k, pr.t)) return o.fail(tag + " assembly");
            }
            if (n <= 12) {
                auto r = exact_lir(p.base);
                if (r.status != SolveStatus::Found || r.value != 2) return o.fail(tag + " solver");
            }
            ++count;
        }
    o.note << count << " instances";
}

void validators(Outcome& o, std::uint64_t) {
    int pairs = 0;
    for (int k = 2; k <= 40; ++k)
        for (int t = k; t <= 2 * k; ++t)
            for (auto mode : {DegreeMode::NoHalfEdges, DegreeMode::HalfEdges}) {
                if (!mode_admissible(t, k, mode)) continue;
                std::string tag = "t=" + std::to_string(t) + " k=" + std::to_string(k) + " " + to_string(mode);
                if (!validate_A(build_A(t, k, mode)).empty()) return o.fail(tag + " A");
                if (!validate_B(build_B(t, k, mode)).empty()) return o.fail(tag + " B");
                auto d = build_degree_list(t, k, mode);
                const auto& L = d.L;
                for (int i = 0; i < t; ++i)
                    for (int j = i + 1; j < t; ++j)
                        if (L[i] + L[j] >= t - 1 && j - i > k) return o.fail(tag + " distance bound");
                if (mode == DegreeMode::NoHalfEdges) {
                    int x = t / 4;
                    std::vector<std::vector<int>> table{
                        {x, 2 * x, x}, {x, 2 * x, x + 1}, {x, 2 * x + 1, x + 1}, {x + 1, 2 * x + 1, x + 1}};
                    if (d.parts != table[t % 4]) return o.fail(tag + " split lengths");
                    std::set<int> outer(L.begin(), L.begin() + d.parts[0]);
                    outer.insert(L.end() - d.parts[2], L.end());
                    for (int v = 0; v <= (t - 1) / 2; ++v)
                        if (!outer.count(v)) return o.fail(tag + " coverage");
                }
                ++pairs;
            }
    o.note << pairs << " (t,k,mode) triples";
}

void multipartite(Outcome& o, std::uint64_t) {
    int count = 0, solved = 0;
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& sizes) {
        int k = static_cast<int>(sizes.size());
        if (k >= 2 && sizes[0] > 1 && o.ok) {
            auto p = color_complete_multipartite(sizes);
            if (p.doublings() != 0 || !verify_plan(p).ok) return o.fail("coloring");
            int n = 0;
            for (int s : sizes) n += s;
            if (n <= 10) {
                SolveBudget b;
                b.max_colors = 2;
                if (exact_lir(p.base, b).status != SolveStatus::Found) return o.fail("solver");
                ++solved;
            }
            ++count;
        }
        if (k == 5) return;
        for (int s = 1; s <= (k ? sizes.back() : 5); ++s) {
            sizes.push_back(s);
            rec(sizes);
            sizes.pop_back();
        }
    };
    std::vector<int> start;
    rec(start);
    if (o.ok) o.note << count << " partitions, " << solved << " confirmed by the solver";
}

SplitProfile profile(int n, std::vector<int> d, bool shared = false) {
    d.resize(n, 0);
    return {n, d, shared};
}

void split(Outcome& o, std::uint64_t seed) {
    std::vector<SplitProfile> listed{profile(2, {1, 1})};
    for (int n = 2; n <= 12; ++n)
        for (int d1 = 1; d1 < n; ++d1) {
            auto p = profile(n, {d1});
            if (split_in_exception_list(p)) listed.push_back(p);
        }
    for (int n = 6; n <= 8; ++n)
        for (bool shared : {false, true}) listed.push_back(profile(n, {1, 1}, shared));
    for (const auto& p : listed) {
        std::string tag = "n=" + std::to_string(p.n) + " d1=" + std::to_string(p.d[0]);
        if (!split_in_exception_list(p)) return o.fail(tag + " not listed");
        auto plan = color_split(p);
        if (plan.doublings() != 1 || !verify_plan(plan).ok) return o.fail(tag);
        // no 2-liec without doubling plus a one-doubling certificate
        auto r = search_2liec(plan.base);
        if (r.status != SolveStatus::ExhaustedNoSolution) return o.fail(tag + " solver");
    }
    std::mt19937_64 rng(seed + 5);
    int outside = 0;
    while (outside < 200) {
        int n = std::uniform_int_distribution<int>(2, 12)(rng);
        std::vector<int> d(n);
        for (auto& x : d) x = std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? std::uniform_int_distribution<int>(1, 6)(rng) : 0;
        std::sort(d.rbegin(), d.rend());
        if (d[0] == 0) continue;
        SplitProfile p{n, d, false};
        if (split_in_exception_list(p)) continue;
        auto plan = color_split(p);
        if (plan.doublings() != 0 || !verify_plan(plan).ok) return o.fail("outside profile " + std::to_string(outside));
        ++outside;
    }
    o.note << listed.size() << " listed profiles, 200 outside";
}

void cacti(Outcome& o, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 8);
    int done = 0;
    while (done < 200) {
        auto s = random_taustar(rng, 1 + done % 6);
        if (s.steps.empty()) continue;
        auto lay = build_taustar(s);
        auto plan = color_special_cactus(s);
        if (!verify_plan(plan).ok || plan.doublings() > static_cast<int>(lay.cycles.size()) ||
            !independent_nonpendant(plan))
            return o.fail("script " + std::to_string(done));
        ++done;
    }
    auto tc = triangle_chain(2);
    auto r = exact_D_lir(tc);
    if (r.status != SolveStatus::Found || r.value != 2 || pendant_triangle_bound(tc) != 2) return o.fail("triangle chain");
    for (int m : {2, 3}) {
        auto g = eighth_gadget(m);
        if (g.plan.doublings() != m || !verify_plan(g.plan).ok) return o.fail("gadget " + std::to_string(m));
    }
    auto e = exact_D_lir(eighth_gadget(2).graph);
    if (e.status != SolveStatus::Found || e.value != 2) return o.fail("gadget minimality");
    o.note << "200 scripts; triangle chain D = 2; gadget m = 2 minimal";
}

void checksums(Outcome& o, std::uint64_t) {
    for (const char* name : {"fig2_c11_3", "fig5_k11"}) {
        auto f = load_fixture(name);
        std::multiset<std::pair<int, int>> got, want;
        for (auto d : color_degrees(f.plan.doubled_graph(), f.plan.coloring)) got.insert({d.blue, d.red});
        for (auto d : f.labels) want.insert({d.blue, d.red});
        if (got != want) return o.fail(name);
    }
    auto has = [](const char* name, std::vector<std::pair<int, int>> xs) {
        auto f = load_fixture(name);
        std::multiset<std::pair<int, int>> got;
        for (auto d : color_degrees(f.plan.doubled_graph(), f.plan.coloring)) got.insert({d.blue, d.red});
        return std::all_of(xs.begin(), xs.end(), [&](auto x) { return got.count(x) > 0; });
    };
    if (!has("fig2_c11_3", {{5, 1}, {0, 6}, {3, 3}})) return o.fail("fig2 pairs");
    if (!has("fig5_k11", {{9, 1}, {1, 9}})) return o.fail("fig5 pairs");
    o.note << "label multisets match";
}

void oracle(Outcome& o, std::uint64_t) {
    int count = 0;
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : connected_graphs(n)) {
            SolveBudget b;
            b.max_colors = std::max(1, g.size());
            auto r = exact_lir(g, b);
            int mine = r.status == SolveStatus::Found ? r.value : -1;
            if (mine != ref::naive_lir(g, b.max_colors)) return o.fail("lir, graph " + std::to_string(count));
            if (exists_2liec(g).has_value() != ref::naive_has_2liec(g)) return o.fail("2-liec, graph " + std::to_string(count));
            ++count;
        }
    o.note << count << " graphs";
}


using Fn = void (*)(Outcome&, std::uint64_t);

const std::vector<std::pair<std::string, Fn>>& table() {
    static const std::vector<std::pair<std::string, Fn>> t{
        {"thm-paths", paths},          {"thm-cycles", cycles},         {"thm-trees", trees},
        {"thm-kn", complete},          {"bowtie", bowtie_lir},         {"thm-powcycle", powers},
        {"lemma-a6-validator", validators}, {"thm-kpartite", multipartite}, {"thm-split", split},
        {"thm-taustar", cacti},        {"fixtures", checksums},        {"oracle", oracle}};
    return t;
}

}  // namespace

std::vector<std::string> sweep_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : table()) out.push_back(name);
    return out;
}

SweepResult run_sweep(const std::string& name, std::uint64_t seed) {
    for (const auto& [n, fn] : table()) {
        if (n != name) continue;
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            fn(o, seed);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return {name, o.ok, o.note.str(), s};
    }
    throw Error("unknown sweep suite " + name);
}

}  // namespace lir
