#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>

#include "helpers.hpp"
#include "lirlab/solver.hpp"
#include "reference.hpp"

using namespace lir;

namespace {

bool certificate_ok(const Multigraph& g, const SolveResult& r) {
    return static_cast<int>(r.coloring.size()) == g.size() && ref::naive_is_liec(g, r.coloring);
}

}  // namespace

TEST_CASE("exact_lir examples with certificates") {
    auto b = exact_lir(bowtie());
    REQUIRE(b.status == SolveStatus::Found);
    CHECK(b.value == 4);
    CHECK(certificate_ok(bowtie(), b));

    auto c6 = exact_lir(cycle_graph(6));
    CHECK(c6.value == 3);
    CHECK(certificate_ok(cycle_graph(6), c6));

    auto p5 = exact_lir(path_graph(5));
    CHECK(p5.value == 2);
    CHECK(certificate_ok(path_graph(5), p5));

    CHECK(exact_lir(path_graph(3)).value == 1);
    CHECK(exact_lir(cycle_graph(7)).status == SolveStatus::ExhaustedNoSolution);
}

TEST_CASE("2-liec existence") {
    auto c8 = exists_2liec(cycle_graph(8));
    REQUIRE(c8.has_value());
    CHECK(verify_liec(cycle_graph(8), *c8).ok);
    CHECK_FALSE(exists_2liec(complete_graph(4)).has_value());
    auto k4d = apply_doubling(complete_graph(4), {0});
    auto w = exists_2liec(k4d);
    REQUIRE(w.has_value());
    CHECK(verify_liec(k4d, *w).ok);
}

TEST_CASE("exact D_lir values") {
    auto k6 = exact_D_lir(complete_graph(6));
    REQUIRE(k6.status == SolveStatus::Found);
    CHECK(k6.value == 2);
    CHECK(verify_plan(*k6.plan).ok);

    auto c7 = exact_D_lir(cycle_graph(7));
    CHECK(c7.value == 2);
    CHECK(exact_D_lir(cycle_graph(6)).value == 2);
    CHECK(exact_D_lir(cycle_graph(8)).value == 0);
    CHECK(exact_D_lir(complete_graph(4)).value == 1);
    CHECK(exact_D_lir(complete_graph(5)).value == 1);

    auto tc = exact_D_lir(triangle_chain(2));
    REQUIRE(tc.status == SolveStatus::Found);
    CHECK(tc.value >= 2);
    CHECK(verify_plan(*tc.plan).ok);
}

TEST_CASE("exact D_lir: serial and parallel agree") {
    for (int n = 4; n <= 8; ++n) {
        auto a = exact_D_lir(complete_graph(n), {}, Parallelism::Serial);
        auto b = exact_D_lir(complete_graph(n), {}, Parallelism::OpenMP);
        CHECK(a.value == b.value);
        CHECK(a.plan->doubled == b.plan->doubled);
        CHECK(a.plan->coloring == b.plan->coloring);
    }
}

TEST_CASE("determinism") {
    auto a = exact_D_lir(complete_graph(7));
    auto b = exact_D_lir(complete_graph(7));
    CHECK(a.plan->doubled == b.plan->doubled);
    CHECK(a.plan->coloring == b.plan->coloring);
    auto x = exact_lir(bowtie());
    auto y = exact_lir(bowtie());
    CHECK(x.coloring == y.coloring);
}

TEST_CASE("pendant triangle bound") {
    auto t3 = pendant_triangle_bound(triangle_chain(3));
    CHECK((t3 == 2 || t3 == 3));
    CHECK(pendant_triangle_bound(triangle_chain(2)) == 2);
    // pendant triangles without tails keep vertices of degree 2
    TauStarScript bare{3, {{0, 3, 3}}};
    auto g = build_taustar(bare).graph;
    REQUIRE(in_family_T(g));
    CHECK(pendant_triangle_bound(g) == 0);
    TauStarScript one{3, {{0, 3, 3}, {1, 2, 0}, {2, 2, 0}}};
    CHECK(pendant_triangle_bound(build_taustar(one).graph) == 1);
    CHECK_THROWS_AS(pendant_triangle_bound(cycle_graph(5)), Error);
}

TEST_CASE("exact_lir matches the naive enumerator on all connected graphs up to 6 vertices") {
    int checked = 0;
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : connected_graphs(n)) {
            SolveBudget b;
            b.max_colors = 4;
            auto r = exact_lir(g, b);
            int mine = r.status == SolveStatus::Found ? r.value : -1;
            REQUIRE(mine == ref::naive_lir(g, 4));
            CHECK(exists_2liec(g).has_value() == ref::naive_has_2liec(g));
            ++checked;
        }
    CHECK(checked == 1 + 2 + 6 + 21 + 112);
}

TEST_CASE("exact_lir matches the naive enumerator on random 7-vertex graphs") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 500; ++it) {
        auto g = testing_util::random_connected(7, 0.25, rng);
        if (g.size() > 12) continue;  // keep the naive odometer small
        SolveBudget b;
        b.max_colors = 3;
        auto r = exact_lir(g, b);
        int mine = r.status == SolveStatus::Found ? r.value : -1;
        REQUIRE(mine == ref::naive_lir(g, 3));
    }
}

TEST_CASE("exact D_lir matches the naive enumerator on small graphs") {
    for (int n = 3; n <= 6; ++n)
        for (const auto& g : connected_graphs(n)) {
            if (g.size() > 10) continue;
            if (g == complete_graph(3)) {
                CHECK_THROWS_AS(exact_D_lir(g), Error);
                CHECK(ref::naive_D_lir(g, 3) == -1);
                continue;
            }
            auto r = exact_D_lir(g, testing_util::small_budget(2));
            int mine = r.status == SolveStatus::Found ? r.value : -1;
            REQUIRE(mine == ref::naive_D_lir(g, 2));
        }
}

TEST_CASE("monotonicity: more budget never changes a found value") {
    auto g = complete_graph(6);
    auto a = exact_D_lir(g, testing_util::small_budget(2));
    auto b = exact_D_lir(g, testing_util::small_budget(4));
    CHECK(a.value == b.value);
    auto c = exact_D_lir(g, testing_util::small_budget(1));
    CHECK(c.status == SolveStatus::ExhaustedNoSolution);
    SolveBudget lc;
    lc.max_colors = 3;
    CHECK(exact_lir(bowtie(), lc).status == SolveStatus::ExhaustedNoSolution);
}

TEST_CASE("connected graph counts") {
    std::vector<size_t> want{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) CHECK(connected_graphs(n).size() == want[n - 1]);
}

TEST_CASE("doubling orbits of K4 and C6") {
    CHECK(doubling_orbits(complete_graph(4), 1).size() == 1);
    CHECK(doubling_orbits(complete_graph(4), 2).size() == 2);  // adjacent or disjoint
    CHECK(doubling_orbits(cycle_graph(6), 2).size() == 3);     // distance 0, 1, 2 apart
}

TEST_CASE("budget exhaustion is reported") {
    SolveBudget tiny;
    tiny.node_limit = 10;
    auto r = search_2liec(complete_graph(9), tiny);
    CHECK(r.status == SolveStatus::BudgetExceeded);
    auto d = exact_D_lir(complete_graph(9), tiny);
    CHECK(d.status == SolveStatus::BudgetExceeded);
}

TEST_CASE("checkpointed lower bound resumes") {
    auto path = (std::filesystem::temp_directory_path() / "lirlab_ckpt_test.bin").string();
    std::filesystem::remove(path);
    auto g = complete_graph(8);
    SolveBudget tiny;
    tiny.node_limit = 2000;
    auto first = prove_doubling_lower_bound(g, 2, path, tiny);
    CHECK(first.status == SolveStatus::BudgetExceeded);
    auto done_before = first.branches_done;
    auto full = prove_doubling_lower_bound(g, 2, path);
    CHECK(full.status == SolveStatus::ExhaustedNoSolution);
    CHECK(full.branches_done == full.branches_total);
    auto again = prove_doubling_lower_bound(g, 2, path);
    CHECK(again.status == SolveStatus::ExhaustedNoSolution);
    CHECK(again.branches_total == full.branches_total);
    CHECK(done_before <= full.branches_total);
    CHECK_THROWS_AS(prove_doubling_lower_bound(complete_graph(7), 2, path), Error);
    std::filesystem::remove(path);
}

TEST_CASE("canonical form") {
    auto a = simple_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    auto b = simple_graph(4, {{2, 0}, {0, 3}, {3, 1}});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(a) != canonical_form(simple_graph(4, {{0, 1}, {0, 2}, {0, 3}})));
    auto m = apply_doubling(a, {0});
    auto m2 = apply_doubling(a, {1});
    CHECK(canonical_form(m) != canonical_form(m2));
}
