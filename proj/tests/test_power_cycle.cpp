#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "lirlab/power_cycle.hpp"

using namespace lir;

namespace {

std::multiset<int> multiset_M(int t) {
    std::multiset<int> m;
    for (int i = 0; i <= t - 2; ++i) m.insert(i);
    m.insert((t - 1) / 2);
    return m;
}

std::vector<std::pair<int, int>> admissible(int kmax) {
    std::vector<std::pair<int, int>> out;
    for (int k = 2; k <= kmax; ++k)
        for (int t = k; t <= 2 * k; ++t)
            if (mode_admissible(t, k, DegreeMode::NoHalfEdges) || mode_admissible(t, k, DegreeMode::HalfEdges))
                out.push_back({t, k});
    return out;
}

}  // namespace

TEST_CASE("degree list examples") {
    auto a = build_degree_list(5, 4, DegreeMode::HalfEdges);
    CHECK(std::vector<int>{a.s1, a.s2, a.s3, a.s4} == std::vector<int>{0, 2, 2, 1});
    CHECK(a.L == std::vector<int>{2, 1, 2, 3, 0});
    auto b = build_degree_list(7, 5, DegreeMode::HalfEdges);
    CHECK(std::vector<int>{b.s1, b.s2, b.s3, b.s4} == std::vector<int>{1, 2, 2, 1});
    CHECK(b.L == std::vector<int>{3, 3, 2, 4, 5, 0, 1});
    auto c = build_degree_list(4, 4, DegreeMode::NoHalfEdges);
    CHECK(c.parts == std::vector<int>{1, 2, 1});
    CHECK(c.L == std::vector<int>{1, 1, 2, 0});
    CHECK_THROWS_AS(build_degree_list(3, 4, DegreeMode::NoHalfEdges), Error);
    CHECK_THROWS_AS(build_degree_list(4, 3, DegreeMode::HalfEdges), Error);
}

TEST_CASE("degree lists: permutation, split lengths, coverage, distance bound") {
    for (int k = 2; k <= 40; ++k)
        for (int t = k; t <= 2 * k; ++t)
            for (auto mode : {DegreeMode::NoHalfEdges, DegreeMode::HalfEdges}) {
                if (!mode_admissible(t, k, mode)) continue;
                auto d = build_degree_list(t, k, mode);
                auto& L = d.L;
                REQUIRE(static_cast<int>(L.size()) == t);
                CHECK(std::multiset<int>(L.begin(), L.end()) == multiset_M(t));
                int sum = 0;
                for (int x : d.parts) sum += x;
                CHECK(sum == t);
                for (int i = 0; i < t; ++i)
                    for (int j = i + 1; j < t; ++j)
                        if (L[i] + L[j] >= t - 1) REQUIRE(j - i <= k);
                if (mode == DegreeMode::NoHalfEdges) {
                    int x = t / 4;
                    std::vector<std::vector<int>> table{
                        {x, 2 * x, x}, {x, 2 * x, x + 1}, {x, 2 * x + 1, x + 1}, {x + 1, 2 * x + 1, x + 1}};
                    CHECK(d.parts == table[t % 4]);
                    std::set<int> outer(L.begin(), L.begin() + d.parts[0]);
                    outer.insert(L.end() - d.parts[2], L.end());
                    for (int v = 0; v <= (t - 1) / 2; ++v) CHECK(outer.count(v) == 1);
                } else {
                    int c = t / 2;  // ceil((t-1)/2)
                    CHECK(d.s1 == t + c - 2 * k + 1);
                    CHECK(d.s2 == k - c);
                    CHECK(d.s3 == 2 * k - 1 - t);
                    CHECK(d.s4 == k - 1 - c);
                    CHECK(d.s1 >= 0);
                    CHECK(d.s2 > 0);
                    CHECK(d.s3 > 0);
                    CHECK(d.s4 > 0);
                    CHECK(d.parts == std::vector<int>{d.s1, d.s2, d.s3, d.s4 - 1, 1, d.s1});
                }
            }
}

TEST_CASE("A and B builder examples") {
    auto a = build_A(2, 2);
    CHECK(a.ell == 0);
    auto e = a.edges;
    std::sort(e.begin(), e.end());
    CHECK(e == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {2, 3}});
    auto d = a.degrees();
    CHECK(d[0] + d[3] >= 3);

    auto a75 = build_A(7, 5);
    CHECK(a75.ell == 1);
    std::vector<int> stubs;
    for (int i = 0; i < a75.size(); ++i)
        if (a75.stub[i]) stubs.push_back(i);
    CHECK(stubs == std::vector<int>{1, 7});
    CHECK(validate_A(a75).empty());

    CHECK(build_B(2, 2).degrees() == std::vector<int>{2, 1, 2, 0, 1});
    auto b75 = build_B(7, 5);
    CHECK(b75.degrees()[7] == 0);
    CHECK(validate_B(b75).empty());
}

TEST_CASE("A and B validators pass on every admissible pair up to k = 40") {
    int n = 0;
    for (auto [t, k] : admissible(40)) {
        for (auto mode : {DegreeMode::NoHalfEdges, DegreeMode::HalfEdges}) {
            if (!mode_admissible(t, k, mode)) continue;
            auto a = build_A(t, k, mode);
            auto b = build_B(t, k, mode);
            CHECK_MESSAGE(validate_A(a).empty(), "t=", t, " k=", k);
            CHECK_MESSAGE(validate_B(b).empty(), "t=", t, " k=", k);
            // inner edges form H_t: joined iff the inner degrees sum to at least t-1
            std::vector<int> h(t + 2, 0);
            std::set<std::pair<int, int>> es;
            for (auto [u, v] : a.edges)
                if (u >= 1 && u <= t && v >= 1 && v <= t) {
                    es.insert({std::min(u, v), std::max(u, v)});
                    ++h[u];
                    ++h[v];
                }
            CHECK(std::multiset<int>(h.begin() + 1, h.begin() + t + 1) == multiset_M(t));
            for (int i = 1; i <= t; ++i)
                for (int j = i + 1; j <= t; ++j)
                    REQUIRE_MESSAGE(es.count({i, j}) == (h[i] + h[j] >= t - 1 ? 1u : 0u), "t=", t, " k=", k);
            ++n;
        }
    }
    CHECK(n > 100);
}

TEST_CASE("validators catch broken graphs") {
    auto a = build_A(6, 5);
    auto bad = a;
    bad.edges.push_back({0, a.size() - 1});
    CHECK_FALSE(validate_A(bad).empty());
    auto far = build_A(7, 5);
    far.edges.push_back({1, 8});
    auto names = validate_A(far);
    CHECK(std::find(names.begin(), names.end(), "a5") != names.end());
    auto stubbed = build_A(2, 2);
    stubbed.stub[0] = true;
    CHECK_FALSE(validate_A(stubbed).empty());
    auto b = build_B(4, 4);
    b.edges.pop_back();
    CHECK_FALSE(validate_B(b).empty());
}

TEST_CASE("parameter choice") {
    auto a = choose_parameters(10, 4);
    CHECK(a.t == 4);
    CHECK(a.p == 2);
    CHECK(a.q == 0);
    auto b = choose_parameters(7, 2);
    CHECK(b.t == 2);
    CHECK(b.p == 1);
    CHECK(b.q == 1);
    auto c = choose_parameters(6, 2);
    CHECK(c.t == 2);
    CHECK(c.p == 2);
    for (int k = 2; k <= 12; ++k) CHECK_NOTHROW(choose_parameters(2 * k + 2, k));
    for (int k = 2; k <= 10; ++k)
        for (int n = 2 * k + 2; n <= 200; ++n) {
            if (n == 11 && k == 3) continue;
            auto p = choose_parameters(n, k);
            CHECK(n == p.p * (p.t + 1) + p.q * (p.t + 2));
            CHECK(p.p + p.q >= 2);
            CHECK(mode_admissible(p.t, k, p.mode));
            if (k <= 3) CHECK(p.t == k);
        }
    CHECK_THROWS_AS(choose_parameters(11, 3), Error);
    CHECK_THROWS_AS(choose_parameters(7, 3), Error);
}

TEST_CASE("the C11^3 figure coloring") {
    auto p = color_power_of_cycle(11, 3);
    CHECK(p.doublings() == 0);
    CHECK(verify_plan(p).ok);
    std::vector<std::pair<int, int>> want{{5, 1}, {0, 6}, {2, 4}, {4, 2}, {1, 5}, {3, 3},
                                          {5, 1}, {0, 6}, {4, 2}, {3, 3}, {1, 5}};
    auto d = color_degrees(p.base, p.coloring);
    std::vector<std::pair<int, int>> got;
    for (auto x : d) got.push_back({x.blue, x.red});
    CHECK(got == want);
}

TEST_CASE("powers of cycles: gluing regimes and distance properties") {
    auto small = color_power_of_cycle(6, 2);
    CHECK(verify_plan(small).ok);
    bool saw_p0 = false, saw_q0 = false, saw_mixed = false;
    for (int k = 2; k <= 10; ++k)
        for (int n = 2 * k + 2; n <= 120; ++n) {
            auto plan = color_power_of_cycle(n, k);
            REQUIRE(verify_plan(plan).ok);
            CHECK(plan.doublings() == 0);
            CHECK(plan.base == power_of_cycle(n, k));
            if (n == 11 && k == 3) continue;
            auto pr = choose_parameters(n, k);
            saw_p0 |= pr.p == 0;
            saw_q0 |= pr.q == 0;
            saw_mixed |= pr.p > 0 && pr.q > 0;
            auto blue = assemble_blue(pr);
            CHECK(assembly_distances_ok(blue, k, pr.t));
        }
    CHECK(saw_p0);
    CHECK(saw_q0);
    CHECK(saw_mixed);
    CHECK_THROWS_AS(color_power_of_cycle(7, 3), Error);
}

TEST_CASE("distance checker rejects a bad assembly") {
    auto c = cycle_graph(10);
    CHECK_FALSE(assembly_distances_ok(c, 1, 2));  // all degrees equal at distance 1
    CHECK(cyclic_distance(10, 1, 9) == 2);
}
