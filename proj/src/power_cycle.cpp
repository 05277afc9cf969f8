#include "lirlab/power_cycle.hpp"

#include <algorithm>
#include <set>

#include "lirlab/colorers.hpp"
#include "lirlab/families.hpp"
#include "lirlab/fixtures.hpp"

namespace lir {

std::string to_string(DegreeMode m) { return m == DegreeMode::NoHalfEdges ? "no-half-edges" : "half-edges"; }

std::vector<int> HalfEdgeGraph::degrees() const {
    std::vector<int> d(size(), 0);
    for (auto [u, v] : edges) {
        ++d[u];
        ++d[v];
    }
    for (int i = 0; i < size(); ++i)
        if (stub[i]) ++d[i];
    return d;
}

bool mode_admissible(int t, int k, DegreeMode mode) {
    if (k < 2 || t < k) return false;
    if (mode == DegreeMode::NoHalfEdges) return t % 2 == 0 ? 3 * t <= 4 * k - 2 : 3 * t <= 4 * k - 3;
    return k >= 4 && 3 * t >= 4 * k - 1 && 5 * t <= 8 * k - 5;
}

DegreeList build_degree_list(int t, int k, DegreeMode mode) {
    if (!mode_admissible(t, k, mode)) throw Error("degree list: (t,k) outside the bounds of this mode");
    DegreeList d;
    d.t = t;
    d.k = k;
    d.mode = mode;
    int f = (t - 1) / 2;
    if (mode == DegreeMode::NoHalfEdges) {
        std::vector<int> m;
        for (int v = 0; v <= t - 2; ++v) m.push_back(v);
        m.push_back(f);
        std::vector<int> odd, even;
        for (int v : m) (v % 2 ? odd : even).push_back(v);
        std::sort(odd.begin(), odd.end());
        std::sort(even.rbegin(), even.rend());
        d.L = odd;
        d.L.insert(d.L.end(), even.begin(), even.end());
        int x = t / 4, y = t % 4;
        int l1 = y == 3 ? x + 1 : x;
        int l3 = y == 0 ? x : x + 1;
        d.parts = {l1, t - l1 - l3, l3};
        return d;
    }
    int c = t / 2;  // ceil((t-1)/2)
    d.s1 = t + c - 2 * k + 1;
    d.s2 = k - c;
    d.s3 = 2 * k - 1 - t;
    d.s4 = k - 1 - c;
    for (int i = 0; i < d.s1; ++i) d.L.push_back(f + i);
    for (int i = 0; i < d.s2; ++i) d.L.push_back(f - i);
    for (int v = f + d.s1; v <= t - 2; ++v) d.L.push_back(v);
    for (int i = 0; i < d.s4 - 1; ++i) d.L.push_back(f - d.s2 - i);
    d.L.push_back(0);
    for (int v = f - d.s2 - (d.s4 - 1); v >= 1; --v) d.L.push_back(v);
    d.parts = {d.s1, d.s2, d.s3, d.s4 - 1, 1, d.s1};
    if (static_cast<int>(d.L.size()) != t) throw Error("internal: half-edge degree list has the wrong length");
    return d;
}

namespace {

DegreeMode pick_mode(int t, int k) {
    if (mode_admissible(t, k, DegreeMode::NoHalfEdges)) return DegreeMode::NoHalfEdges;
    if (mode_admissible(t, k, DegreeMode::HalfEdges)) return DegreeMode::HalfEdges;
    throw Error("no admissible construction for t=" + std::to_string(t) + ", k=" + std::to_string(k));
}

}  // namespace

HalfEdgeGraph build_A(int t, int k) { return build_A(t, k, pick_mode(t, k)); }
HalfEdgeGraph build_B(int t, int k) { return build_B(t, k, pick_mode(t, k)); }

HalfEdgeGraph build_A(int t, int k, DegreeMode mode) {
    auto d = build_degree_list(t, k, mode);
    HalfEdgeGraph a;
    a.t = t;
    a.k = k;
    a.stub.assign(t + 2, false);
    std::vector<int> h(t + 1, 0);  // H_t degree at position 1..t
    int to_first = 0, from_last = 0;  // a0 joins [1,to_first]; a_{t+1} joins [from_last,t]
    int last_end = t;
    if (mode == DegreeMode::NoHalfEdges) {
        int l1 = d.parts[0], l2 = d.parts[1], l3 = d.parts[2];
        if (t % 4 == 0 || t % 4 == 3) {
            for (int i = 1; i <= t; ++i) h[i] = d.L[i - 1];
            to_first = l1 + l2;
            from_last = l1 + 1;
        } else {
            for (int i = 1; i <= t; ++i) h[i] = d.L[t - i];
            to_first = l2 + l3;
            from_last = l3 + 1;
        }
    } else {
        for (int i = 1; i <= t; ++i) h[i] = d.L[i - 1];
        to_first = d.s1 + d.s2 + d.s3;
        from_last = d.s1 + d.s2 + 1;
        last_end = d.s1 + d.s2 + d.s3 + d.s4;
        a.ell = d.s1;
        for (int i = 1; i <= d.s1; ++i) a.stub[i] = true;
        for (int i = last_end + 1; i <= t; ++i) a.stub[i] = true;
    }
    for (int i = 1; i <= t; ++i)
        for (int j = i + 1; j <= t; ++j)
            if (h[i] + h[j] >= t - 1) a.edges.emplace_back(i, j);
    for (int i = 1; i <= to_first; ++i) a.edges.emplace_back(0, i);
    for (int j = from_last; j <= last_end; ++j) a.edges.emplace_back(j, t + 1);
    return a;
}

HalfEdgeGraph build_B(int t, int k, DegreeMode mode) {
    auto a = build_A(t, k, mode);
    int z = t - a.ell + 1;  // position of the new isolated vertex
    auto move = [&](int i) { return i < z ? i : i + 1; };
    HalfEdgeGraph b;
    b.t = t;
    b.k = k;
    b.ell = a.ell;
    b.stub.assign(t + 3, false);
    for (auto [u, v] : a.edges) b.edges.emplace_back(move(u), move(v));
    for (int i = 0; i < a.size(); ++i) b.stub[move(i)] = a.stub[i];
    return b;
}

namespace {

bool exact_range(std::vector<int> v, int lo, int hi) {
    std::sort(v.begin(), v.end());
    if (static_cast<int>(v.size()) != hi - lo + 1) return false;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i] != lo + i) return false;
    return true;
}

bool stubs_exactly(const HalfEdgeGraph& g, const std::vector<std::pair<int, int>>& ranges) {
    for (int i = 0; i < g.size(); ++i) {
        bool want = false;
        for (auto [lo, hi] : ranges)
            if (i >= lo && i <= hi) want = true;
        if (g.stub[i] != want) return false;
    }
    return true;
}

}  // namespace

std::vector<std::string> validate_A(const HalfEdgeGraph& a) {
    std::vector<std::string> bad;
    int t = a.t, k = a.k, l = a.ell;
    if (a.size() != t + 2) return {"shape"};
    auto d = a.degrees();
    if (d[0] + d[t + 1] < t + 1) bad.push_back("a1");
    if (!exact_range(std::vector<int>(d.begin() + 1, d.begin() + t + 1), 1, t)) bad.push_back("a2");
    if (a.stub[0] || a.stub[t + 1]) bad.push_back("a3");
    if (l < 0 || l > t / 2 || !stubs_exactly(a, {{1, l}, {t - l + 1, t}})) bad.push_back("a4");
    bool a5 = true, a6 = true;
    for (auto [u, v] : a.edges) {
        int i = std::min(u, v), j = std::max(u, v);
        if (j - i > k) a5 = false;
        if (i < t - l + 1 && t - l + 1 <= j && j - i > k - 1) a6 = false;
    }
    if (!a5) bad.push_back("a5");
    if (!a6) bad.push_back("a6");
    return bad;
}

std::vector<std::string> validate_B(const HalfEdgeGraph& b) {
    std::vector<std::string> bad;
    int t = b.t, k = b.k, l = b.ell;
    if (b.size() != t + 3) return {"shape"};
    auto d = b.degrees();
    if (d[0] + d[t + 2] < t + 1) bad.push_back("b1");
    if (!exact_range(std::vector<int>(d.begin() + 1, d.begin() + t + 2), 0, t)) bad.push_back("b2");
    if (b.stub[0] || b.stub[t + 2]) bad.push_back("b3");
    if (!stubs_exactly(b, {{1, l}, {t - l + 2, t + 1}})) bad.push_back("b4");
    for (auto [u, v] : b.edges)
        if (std::abs(u - v) > k) {
            bad.push_back("b5");
            break;
        }
    return bad;
}

PowerCycleParams choose_parameters(int n, int k) {
    if (k < 2 || n < 2 * k + 2) throw Error("choose_parameters needs k >= 2 and n >= 2k+2");
    if (n == 11 && k == 3) throw Error("C_11^3 has no block decomposition; it is covered by a fixture");
    for (int t = k; 5 * t <= 8 * k - 5 || t == k; ++t) {
        DegreeMode mode;
        if (mode_admissible(t, k, DegreeMode::NoHalfEdges))
            mode = DegreeMode::NoHalfEdges;
        else if (mode_admissible(t, k, DegreeMode::HalfEdges))
            mode = DegreeMode::HalfEdges;
        else
            continue;
        for (int q = 0; q * (t + 2) <= n; ++q) {
            int rest = n - q * (t + 2);
            if (rest % (t + 1)) continue;
            int p = rest / (t + 1);
            if (p + q >= 2) return {n, k, t, p, q, mode};
        }
    }
    throw Error("choose_parameters found no decomposition for n=" + std::to_string(n) + ", k=" + std::to_string(k));
}

Multigraph assemble_blue(const PowerCycleParams& pr) {
    auto A = build_A(pr.t, pr.k, pr.mode);
    auto B = build_B(pr.t, pr.k, pr.mode);
    int blocks = pr.p + pr.q;
    if (blocks < 2) throw Error("assembly needs at least two blocks");
    std::vector<const HalfEdgeGraph*> seq;
    for (int j = 0; j < pr.p; ++j) seq.push_back(&A);
    for (int j = 0; j < pr.q; ++j) seq.push_back(&B);
    // block j owns its vertices 1..last; its vertex 0 is the previous block's last
    std::vector<int> offset(blocks + 1, 0);
    for (int j = 0; j < blocks; ++j) offset[j + 1] = offset[j] + seq[j]->size() - 1;
    int n = offset[blocks];
    if (n != pr.n) throw Error("internal: block sizes do not add up to n");
    auto where = [&](int j, int i) {
        if (i == 0) return (offset[j] - 1 + n) % n;
        return offset[j] + i - 1;
    };
    std::set<std::pair<int, int>> edges;
    auto add = [&](int u, int v) {
        if (u == v || !edges.insert({std::min(u, v), std::max(u, v)}).second)
            throw Error("internal: assembly produced a loop or a repeated edge");
    };
    int l = A.ell;
    for (int j = 0; j < blocks; ++j) {
        const auto& g = *seq[j];
        for (auto [u, v] : g.edges) add(where(j, u), where(j, v));
        int nj = (j + 1) % blocks;
        int last = g.size() - 1;
        for (int i = 1; i <= l; ++i) add(where(j, last - 1 - l + i), where(nj, i));
    }
    std::vector<std::pair<int, int>> e(edges.begin(), edges.end());
    return simple_graph(n, e);
}

int cyclic_distance(int n, int u, int v) {
    int d = std::abs(u - v) % n;
    return std::min(d, n - d);
}

bool assembly_distances_ok(const Multigraph& blue, int k, int t) {
    int n = blue.n();
    for (const auto& b : blue.bundles())
        if (cyclic_distance(n, b.u, b.v) > k) return false;
    auto d = blue.degrees();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (d[u] == d[v] && cyclic_distance(n, u, v) < t + 1) return false;
    return true;
}

DoublingPlan color_power_of_cycle(int n, int k) {
    if (k < 2 || n < 2 * k + 2) throw Error("power of cycle is complete or undefined for these parameters");
    if (n == 11 && k == 3) return checked(load_fixture("fig2_c11_3").plan, "color_power_of_cycle");
    auto pr = choose_parameters(n, k);
    auto blue = assemble_blue(pr);
    auto g = power_of_cycle(n, k);
    std::vector<PlanEdge> e;
    for (const auto& b : g.bundles()) e.push_back({b.u, b.v, blue.adjacent(b.u, b.v) ? Color::Blue : Color::Red});
    for (const auto& b : blue.bundles())
        if (!g.adjacent(b.u, b.v)) throw Error("internal: blue edge outside C_n^k");
    return checked(make_plan(n, e), "color_power_of_cycle");
}

}  // namespace lir
