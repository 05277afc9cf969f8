#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "lirlab/fixtures.hpp"
#include "lirlab/io.hpp"
#include "reference.hpp"

using namespace lir;

namespace {

int count_edge_lines(const std::string& dot) {
    std::istringstream in(dot);
    std::string line;
    int n = 0;
    while (std::getline(in, line))
        if (line.find("--") != std::string::npos) ++n;
    return n;
}

EdgeColoring all(const Multigraph& g, Color c) { return EdgeColoring(g.size(), c); }

}  // namespace

TEST_CASE("color degrees of a red P3") {
    auto g = path_graph(3);
    auto d = color_degrees(g, all(g, Color::Red));
    CHECK(d == ColorDegrees{{1, 0}, {2, 0}, {1, 0}});
}

TEST_CASE("color degrees of the empty graph are zero") {
    Multigraph g(4, {});
    auto d = color_degrees(g, {});
    for (const auto& p : d) CHECK(p == DegreePair{0, 0});
}

TEST_CASE("K3 with one bichromatic doubled pair matches its figure labels") {
    auto f = load_copy_fixture("fig7_k3_prime");
    auto d = copy_color_degrees(f);
    std::vector<DegreePair> want{{1, 1}, {1, 2}, {2, 1}};
    auto got = d;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    CHECK(copy_coloring_ok(f));
    CHECK(count_edge_lines(copy_fixture_dot(f)) == 4);
}

TEST_CASE("is_locally_irregular examples") {
    CHECK(is_locally_irregular(path_graph(3)));
    CHECK_FALSE(is_locally_irregular(cycle_graph(4)));
    auto p4 = path_graph(4);
    auto m = apply_doubling(p4, {p4.bundle_index(0, 1)});
    CHECK(m.degrees() == std::vector<int>{2, 3, 2, 1});
    CHECK(is_locally_irregular(m));
}

TEST_CASE("verify_liec: each pair of classes of the bow-tie 4-coloring is fine") {
    auto g = bowtie();
    std::vector<std::vector<std::pair<int, int>>> classes{
        {{2, 0}, {0, 1}, {0, 5}},
        {{5, 4}, {4, 0}, {1, 9}, {9, 6}},
        {{0, 3}, {3, 2}, {7, 8}, {8, 1}},
        {{7, 1}, {1, 6}}};
    std::vector<int> col(g.size(), -1);
    for (int c = 0; c < 4; ++c)
        for (auto [u, v] : classes[c]) col[g.bundle_index(u, v)] = c;
    CHECK(ref::naive_is_liec(g, col));
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            std::vector<std::pair<int, int>> e;
            for (auto x : classes[a]) e.push_back(x);
            for (auto x : classes[b]) e.push_back(x);
            auto h = simple_graph(g.n(), e);
            ColoringBuilder cb(h);
            for (auto [u, v] : classes[a]) cb.set(u, v, Color::Red);
            for (auto [u, v] : classes[b]) cb.set(u, v, Color::Blue);
            CHECK(verify_liec(h, cb.take()).ok);
        }
}

TEST_CASE("verify_liec on cycles") {
    auto c8 = cycle_graph(8);
    EdgeColoring alt;
    for (int i = 0; i < 8; ++i) alt.push_back((i / 2) % 2 ? Color::Blue : Color::Red);
    ColoringBuilder cb(c8);
    for (int i = 0; i < 8; ++i) cb.set(i, (i + 1) % 8, alt[i]);
    CHECK(verify_liec(c8, cb.take()).ok);

    auto c6 = cycle_graph(6);
    int good = 0;
    for (int mask = 0; mask < 64; ++mask) {
        EdgeColoring c(6);
        for (int i = 0; i < 6; ++i) c[i] = (mask >> i & 1) ? Color::Blue : Color::Red;
        if (verify_liec(c6, c).ok) ++good;
    }
    CHECK(good == 0);
}

TEST_CASE("verify_liec lists every offending bundle") {
    auto g = path_graph(4);
    auto r = verify_liec(g, all(g, Color::Red));
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].bundle == g.bundle_index(1, 2));
    CHECK_THROWS_AS(verify_liec(g, EdgeColoring(2, Color::Red)), Error);
}

TEST_CASE("apply_doubling") {
    auto p2 = path_graph(2);
    auto m = apply_doubling(p2, {0});
    CHECK(m.degrees() == std::vector<int>{2, 2});
    CHECK_FALSE(is_locally_irregular(m));
    auto k5 = complete_graph(5);
    CHECK(apply_doubling(k5, {}) == k5);
    auto k4 = complete_graph(4);
    auto d = apply_doubling(k4, {0});
    CHECK(exists_2liec(d).has_value());
    for (int i = 0; i < d.size(); ++i) {
        CHECK(d.bundle(i).u == k4.bundle(i).u);
        CHECK(d.bundle(i).v == k4.bundle(i).v);
    }
    CHECK_THROWS_AS(apply_doubling(k4, {99}), Error);
    CHECK_THROWS_AS(apply_doubling(d, {1}), Error);
}

TEST_CASE("K4 figure plan carries its degree labels") {
    auto f = load_fixture("fig4_k4");
    std::vector<DegreePair> want{{4, 0}, {3, 1}, {1, 2}, {2, 1}};  // (red, blue)
    auto got = color_degrees(f.plan.doubled_graph(), f.plan.coloring);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    CHECK(f.plan.doublings() == 1);
}

TEST_CASE("encode and decode") {
    auto p3 = path_graph(3);
    CHECK(decode(encode(p3)).graph == p3);
    CHECK_THROWS_AS(decode(R"({"n":3,"edges":[[0,0,1]]})"), ParseError);
    CHECK_THROWS_AS(decode(R"({"n":3,"edges":[[0,1,1],[1,0,1]]})"), ParseError);
    CHECK_THROWS_AS(decode("{not json"), ParseError);
    auto plan = color_complete(6);
    auto back = decode_plan(encode(plan));
    CHECK(back.base == plan.base);
    CHECK(back.doubled == plan.doubled);
    CHECK(back.coloring == plan.coloring);
}

TEST_CASE("DOT export draws a doubled bundle twice") {
    auto k3 = complete_graph(3);
    DoublingPlan p{k3, {0}, {Color::Blue, Color::Red, Color::Blue}};
    auto dot = export_dot(p);
    CHECK(count_edge_lines(dot) == 4);
    CHECK(dot.find("color=red") != std::string::npos);
    CHECK(dot.find("color=blue") != std::string::npos);
}

TEST_CASE("verifier agrees with the naive reference on random colored multigraphs") {
    std::mt19937_64 rng(20261019);
    std::uniform_int_distribution<int> nd(2, 10);
    std::bernoulli_distribution coin(0.5), dbl(0.2);
    int disagreements = 0, oks = 0;
    for (int it = 0; it < 10000; ++it) {
        int n = nd(rng);
        auto g = testing_util::random_connected(n, 0.35, rng);
        std::vector<Bundle> bs = g.bundles();
        for (auto& b : bs)
            if (dbl(rng)) b.mult = 2;
        Multigraph m(n, bs);
        EdgeColoring c(m.size());
        std::vector<int> ci(m.size());
        for (int i = 0; i < m.size(); ++i) {
            c[i] = coin(rng) ? Color::Blue : Color::Red;
            ci[i] = c[i] == Color::Red ? 0 : 1;
        }
        bool ours = verify_liec(m, c).ok;
        if (ours != ref::naive_is_liec(m, ci)) ++disagreements;
        oks += ours;
        auto d = color_degrees(m, c);
        auto deg = m.degrees();
        for (int v = 0; v < n; ++v) REQUIRE(d[v].red + d[v].blue == deg[v]);
    }
    CHECK(disagreements == 0);
    CHECK(oks > 0);
}

TEST_CASE("JSON round trip on random plans") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 200; ++it) {
        auto t = random_tree(3 + it % 20, rng);
        auto p = color_tree(t);
        auto text = encode(p);
        auto q = decode_plan(text);
        CHECK(encode(q) == text);
        auto g = decode(encode(p.doubled_graph(), p.coloring));
        CHECK(g.graph == p.doubled_graph());
        CHECK(*g.coloring == p.coloring);
    }
}
