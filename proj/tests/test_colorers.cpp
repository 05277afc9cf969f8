#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "lirlab/fixtures.hpp"
#include "reference.hpp"

using namespace lir;

namespace {

bool has_pair(const DoublingPlan& p, int v, DegreePair blue_red) {
    auto d = color_degrees(p.doubled_graph(), p.coloring)[v];
    return d.blue == blue_red.red && d.red == blue_red.blue;
}

// (blue, red) pairs, the order the fixture labels use
std::multiset<std::pair<int, int>> labels(const DoublingPlan& p) {
    std::multiset<std::pair<int, int>> out;
    for (auto d : color_degrees(p.doubled_graph(), p.coloring)) out.insert({d.blue, d.red});
    return out;
}

// Every monochromatic edge is irregular, except that the root edge may
// form a component of its own.
bool aliec_ok(const Multigraph& t, const EdgeColoring& c, int root_edge) {
    auto d = color_degrees(t, c);
    for (int i = 0; i < t.size(); ++i) {
        auto b = t.bundle(i);
        auto deg = [&](int v) { return c[i] == Color::Red ? d[v].red : d[v].blue; };
        if (deg(b.u) != deg(b.v)) continue;
        if (i == root_edge && deg(b.u) == 1) continue;
        return false;
    }
    return true;
}

SplitProfile sp(int n, std::vector<int> d, bool shared = false) {
    d.resize(n, 0);
    return {n, d, shared};
}

}  // namespace

TEST_CASE("paths") {
    CHECK(color_path(5).doublings() == 0);
    CHECK(color_path(4).doublings() == 1);
    auto p = color_path(100);
    CHECK(p.doublings() == 1);
    CHECK(verify_plan(p).ok);
    CHECK_THROWS_AS(color_path(2), Error);
    for (int n = 3; n <= 300; ++n) {
        auto q = color_path(n);
        REQUIRE(verify_plan(q).ok);
        CHECK(q.doublings() == (n % 2 == 0 ? 1 : 0));
        CHECK(q.base == path_graph(n));
    }
}

TEST_CASE("cycles") {
    CHECK(color_cycle(8).doublings() == 0);
    CHECK(color_cycle(9).doublings() == 1);
    CHECK(color_cycle(10).doublings() == 2);
    CHECK(color_cycle(11).doublings() == 2);
    CHECK(color_cycle(6).doublings() == 2);
    CHECK(exact_D_lir(cycle_graph(6), testing_util::small_budget(1)).status == SolveStatus::ExhaustedNoSolution);
    CHECK(ref::naive_D_lir(cycle_graph(6), 2) == 2);
    CHECK_THROWS_AS(color_cycle(3), Error);
    const int table[4] = {0, 1, 2, 2};
    for (int n = 4; n <= 300; ++n) {
        auto q = color_cycle(n);
        REQUIRE(verify_plan(q).ok);
        CHECK(q.doublings() == table[n % 4]);
        CHECK(q.base == cycle_graph(n));
    }
}

TEST_CASE("shrubs") {
    auto p2 = path_graph(2);
    auto c = two_aliec_shrub(p2, 0);
    CHECK(c[0] == Color::Red);
    CHECK(aliec_ok(p2, c, 0));

    auto p3 = path_graph(3);
    auto c3 = two_aliec_shrub(p3, 0);
    CHECK(c3 == EdgeColoring{Color::Red, Color::Red});

    // root 0 - 1 - center 2 with three more leaves
    auto star = simple_graph(6, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {2, 5}});
    auto cs = two_aliec_shrub(star, 0);
    CHECK(verify_liec(star, cs).ok);
    CHECK(aliec_ok(star, cs, star.bundle_index(0, 1)));

    CHECK_THROWS_AS(two_aliec_shrub(p3, 1), Error);

    std::mt19937_64 rng(9);
    for (int it = 0; it < 300; ++it) {
        auto t = random_tree(2 + it % 30, rng);
        int leaf = 0;
        while (t.degree(leaf) != 1) ++leaf;
        auto col = two_aliec_shrub(t, leaf);
        int rb = t.incident(leaf)[0].second;
        CHECK(col[rb] == Color::Red);
        CHECK(aliec_ok(t, col, rb));
    }
}

TEST_CASE("trees") {
    auto star = simple_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(color_tree(star).doublings() == 0);
    CHECK(color_tree(path_graph(6)).doublings() == 1);
    CHECK_THROWS_AS(color_tree(path_graph(2)), Error);
    CHECK_THROWS_AS(color_tree(cycle_graph(4)), Error);

    std::mt19937_64 rng(2026);
    for (int it = 0; it < 400; ++it) {
        auto t = random_tree(3 + it % 40, rng);
        auto p = color_tree(t);
        REQUIRE(verify_plan(p).ok);
        CHECK(p.doublings() <= 1);
        CHECK((p.doublings() == 0) == tree_2liec(t).has_value());
        auto deg = t.degrees();
        if (*std::max_element(deg.begin(), deg.end()) >= 5) CHECK(p.doublings() == 0);
    }
}

TEST_CASE("tree 2-liec decision matches the naive enumerator") {
    std::mt19937_64 rng(44);
    for (int it = 0; it < 300; ++it) {
        auto t = random_tree(3 + it % 10, rng);
        CHECK(tree_2liec(t).has_value() == ref::naive_has_2liec(t));
    }
}

TEST_CASE("complete graphs") {
    auto k4 = color_complete(4);
    CHECK(k4.doublings() == 1);
    CHECK(labels(k4) == std::multiset<std::pair<int, int>>{{0, 4}, {1, 3}, {2, 1}, {1, 2}});
    auto k11 = labels(color_complete(11));
    for (auto x : {std::pair{5, 5}, std::pair{5, 6}, std::pair{9, 1}, std::pair{1, 9}}) CHECK(k11.count(x) >= 1);
    for (int n = 4; n <= 30; ++n) {
        auto p = color_complete(n);
        REQUIRE(verify_plan(p).ok);
        CHECK(p.base == complete_graph(n));
        CHECK(p.doublings() == (n >= 6 && n <= 10 ? 2 : 1));
    }
    CHECK_THROWS_AS(color_complete(3), Error);
}

TEST_CASE("complete multipartite") {
    auto p = color_complete_multipartite({3, 3, 3});
    auto d = color_degrees(p.doubled_graph(), p.coloring);
    CHECK(d[0].blue == 4);
    CHECK(d[3].blue == 3);
    CHECK(d[6].blue == 1);
    auto q = color_complete_multipartite({3, 2, 1});
    for (auto c : q.coloring) CHECK(c == Color::Red);
    CHECK(is_locally_irregular(q.base));
    CHECK(verify_plan(color_complete_multipartite({2, 2, 2, 2})).ok);
    CHECK_THROWS_AS(color_complete_multipartite({1, 1, 1}), Error);
    CHECK_THROWS_AS(color_complete_multipartite({2, 3}), Error);
    CHECK_THROWS_AS(color_complete_multipartite({4}), Error);
    // any order through the family dispatcher
    CHECK(verify_plan(color_family(spec::CompleteMultipartite{{1, 3, 2}})).ok);
}

TEST_CASE("split graphs") {
    auto a = color_split(sp(8, {1}));
    CHECK(a.doublings() == 1);
    CHECK(has_pair(a, 0, {3, 6}));
    auto b = color_split(sp(8, {3}));
    CHECK(b.doublings() == 1);
    CHECK(has_pair(b, 0, {2, 9}));
    auto c = color_split(sp(12, {2}));
    CHECK(c.doublings() == 1);
    CHECK(verify_plan(c).ok);
    auto p4 = color_split(sp(2, {1, 1}));
    CHECK(p4.doublings() == 1);
    CHECK(canonical_form(p4.base) == canonical_form(path_graph(4)));
    CHECK(color_split(sp(6, {1, 1}, true)).doublings() <= 1);
    CHECK_THROWS_AS(color_split(sp(5, {0})), Error);
    // outside the list: no doublings
    for (auto prof : std::vector<SplitProfile>{sp(5, {3}), sp(6, {4}), sp(12, {6}), sp(7, {2, 2}), sp(9, {4, 1})}) {
        CHECK_FALSE(split_in_exception_list(prof));
        auto p = color_split(prof);
        CHECK(p.doublings() == 0);
        CHECK(verify_plan(p).ok);
    }
}

TEST_CASE("special cacti") {
    TauStarScript tails{3, {{1, 1, 0}, {2, 1, 0}, {0, 3, 0}}};
    auto p = color_special_cactus(tails);
    CHECK(p.doublings() <= 1);
    CHECK(verify_plan(p).ok);
    auto e = exact_D_lir(p.base);
    REQUIRE(e.status == SolveStatus::Found);
    CHECK(e.value <= p.doublings());

    TauStarScript two{3, {{0, 1, 3}}};
    auto q = color_special_cactus(two);
    CHECK(q.doublings() <= 2);
    CHECK(testing_util::independent_nonpendant(q));

    CHECK_THROWS_AS(color_special_cactus(TauStarScript{5, {}}), Error);

    std::mt19937_64 rng(123);
    for (int it = 0; it < 300; ++it) {
        auto s = random_taustar(rng, 1 + it % 6);
        if (s.steps.empty()) continue;
        auto lay = build_taustar(s);
        auto plan = color_special_cactus(s);
        REQUIRE(verify_plan(plan).ok);
        CHECK(plan.doublings() <= static_cast<int>(lay.cycles.size()));
        CHECK(testing_util::independent_nonpendant(plan));
        CHECK(plan.base == lay.graph);
    }
}

TEST_CASE("constructive counts equal the solver on small instances") {
    std::vector<FamilySpec> exact{spec::Path{3},  spec::Path{4},  spec::Path{7},      spec::Path{8},
                                  spec::Cycle{4}, spec::Cycle{5}, spec::Cycle{6},     spec::Cycle{7},
                                  spec::Cycle{8}, spec::Complete{4}, spec::Complete{5}, spec::Complete{6},
                                  spec::Complete{7}, spec::Complete{8}, spec::CompleteMultipartite{{3, 3}},
                                  spec::CompleteMultipartite{{2, 2, 2}}, spec::PowerOfCycle{6, 2},
                                  spec::PowerOfCycle{8, 3}, spec::Split{sp(4, {1})}, spec::Split{sp(6, {2})},
                                  spec::Split{sp(4, {2})}, spec::Split{sp(5, {3})}};
    for (const auto& s : exact) {
        auto plan = color_family(s);
        auto r = exact_D_lir(plan.base);
        REQUIRE(r.status == SolveStatus::Found);
        CHECK_MESSAGE(plan.doublings() == r.value, family_name(s));
    }
    std::mt19937_64 rng(8);
    for (int it = 0; it < 200; ++it) {
        auto t = random_tree(3 + it % 6, rng);
        auto r = exact_D_lir(t);
        CHECK(color_tree(t).doublings() == r.value);
    }
}
