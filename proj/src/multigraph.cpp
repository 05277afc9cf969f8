#include "lirlab/multigraph.hpp"

#include <algorithm>
#include <numeric>

namespace lir {

Multigraph::Multigraph(int n, std::vector<Bundle> bundles) : n_(n), bundles_(std::move(bundles)) {
    if (n < 0) throw Error("negative vertex count");
    for (auto& b : bundles_) {
        if (b.u < 0 || b.v < 0 || b.u >= n || b.v >= n) throw Error("bundle endpoint out of range");
        if (b.u == b.v) throw Error("loop at vertex " + std::to_string(b.u));
        if (b.mult != 1 && b.mult != 2) throw Error("multiplicity must be 1 or 2");
        if (b.u > b.v) std::swap(b.u, b.v);
    }
    auto by_pair = [](const Bundle& a, const Bundle& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); };
    if (!std::is_sorted(bundles_.begin(), bundles_.end(), by_pair)) std::sort(bundles_.begin(), bundles_.end(), by_pair);
    for (int i = 1; i < size(); ++i)
        if (bundles_[i].u == bundles_[i - 1].u && bundles_[i].v == bundles_[i - 1].v)
            throw Error("duplicate bundle " + std::to_string(bundles_[i].u) + "-" + std::to_string(bundles_[i].v));
    start_.assign(n + 1, 0);
    for (const auto& b : bundles_) {
        ++start_[b.u + 1];
        ++start_[b.v + 1];
    }
    for (int v = 0; v < n; ++v) start_[v + 1] += start_[v];
    inc_.resize(start_[n]);
    auto fill = start_;
    // bundles are sorted by (u,v), so each list comes out ascending: the
    // smaller neighbors arrive first through their own u, then the larger
    for (int i = 0; i < size(); ++i) inc_[fill[bundles_[i].v]++] = {bundles_[i].u, i};
    for (int i = 0; i < size(); ++i) inc_[fill[bundles_[i].u]++] = {bundles_[i].v, i};
}

int Multigraph::bundle_index(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
    auto inc = incident(u);
    auto it = std::lower_bound(inc.begin(), inc.end(), std::pair(v, -1));
    return it != inc.end() && it->first == v ? it->second : -1;
}

int Multigraph::degree(int v) const {
    int d = 0;
    for (auto [w, b] : incident(v)) d += bundles_[b].mult;
    return d;
}

std::vector<int> Multigraph::degrees() const {
    std::vector<int> d(n_, 0);
    for (const auto& b : bundles_) {
        d[b.u] += b.mult;
        d[b.v] += b.mult;
    }
    return d;
}

bool Multigraph::is_simple() const {
    return std::all_of(bundles_.begin(), bundles_.end(), [](const Bundle& b) { return b.mult == 1; });
}

bool Multigraph::connected() const {
    if (n_ <= 1) return true;
    std::vector<bool> seen(n_, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, b] : incident(v))
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

Multigraph simple_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Bundle> b;
    b.reserve(edges.size());
    for (auto [u, v] : edges) b.push_back({u, v, 1});
    return Multigraph(n, std::move(b));
}

Multigraph apply_doubling(const Multigraph& g, const std::vector<int>& doubled) {
    if (!g.is_simple()) throw Error("apply_doubling needs a simple graph");
    auto b = g.bundles();
    for (int id : doubled) {
        if (id < 0 || id >= g.size()) throw Error("no bundle with id " + std::to_string(id));
        b[id].mult = 2;
    }
    return Multigraph(g.n(), std::move(b));
}

ColorDegrees color_degrees(const Multigraph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.size()) != g.size()) throw Error("coloring does not cover the bundles");
    ColorDegrees d(g.n());
    for (int i = 0; i < g.size(); ++i) {
        const auto& b = g.bundle(i);
        if (c[i] == Color::Red) {
            d[b.u].red += b.mult;
            d[b.v].red += b.mult;
        } else if (c[i] == Color::Blue) {
            d[b.u].blue += b.mult;
            d[b.v].blue += b.mult;
        } else {
            throw Error("coloring value out of domain");
        }
    }
    return d;
}

bool is_locally_irregular(const Multigraph& g) {
    auto d = g.degrees();
    for (const auto& b : g.bundles())
        if (d[b.u] == d[b.v]) return false;
    return true;
}

VerificationReport verify_liec(const Multigraph& g, const EdgeColoring& c) {
    auto d = color_degrees(g, c);
    VerificationReport r;
    for (int i = 0; i < g.size(); ++i) {
        const auto& b = g.bundle(i);
        int du = c[i] == Color::Red ? d[b.u].red : d[b.u].blue;
        int dv = c[i] == Color::Red ? d[b.v].red : d[b.v].blue;
        if (du == dv) r.violations.push_back({i, c[i], du, dv});
    }
    r.ok = r.violations.empty();
    return r;
}

VerificationReport verify_plan(const DoublingPlan& plan) { return verify_liec(plan.doubled_graph(), plan.coloring); }

void ColoringBuilder::set(int u, int v, Color c) {
    int i = g_.bundle_index(u, v);
    if (i < 0) throw Error("no edge " + std::to_string(u) + "-" + std::to_string(v));
    c_[i] = c;
    set_[i] = true;
}

EdgeColoring ColoringBuilder::take() const {
    for (int i = 0; i < g_.size(); ++i)
        if (!set_[i]) throw Error("bundle " + std::to_string(i) + " left uncolored");
    return c_;
}

}  // namespace lir
