#include <algorithm>
#include <numeric>

#include "reference.hpp"

namespace ref {

bool naive_is_liec(const lir::Multigraph& g, const std::vector<int>& color) {
    int n = g.n();
    int c_max = 0;
    for (int c : color) c_max = std::max(c_max, c + 1);
    std::vector<std::vector<int>> deg(c_max, std::vector<int>(n, 0));
    for (int i = 0; i < g.size(); ++i) {
        auto b = g.bundle(i);
        deg[color[i]][b.u] += b.mult;
        deg[color[i]][b.v] += b.mult;
    }
    for (int i = 0; i < g.size(); ++i) {
        auto b = g.bundle(i);
        if (deg[color[i]][b.u] == deg[color[i]][b.v]) return false;
    }
    return true;
}

namespace {

// Odometer over all c^m colorings.
bool any_coloring(const lir::Multigraph& g, int c) {
    int m = g.size();
    std::vector<int> col(m, 0);
    while (true) {
        if (naive_is_liec(g, col)) return true;
        int i = 0;
        while (i < m && col[i] == c - 1) col[i++] = 0;
        if (i == m) return false;
        ++col[i];
    }
}

}  // namespace

int naive_lir(const lir::Multigraph& g, int max_colors) {
    if (g.size() == 0) return 0;
    for (int c = 1; c <= max_colors; ++c)
        if (any_coloring(g, c)) return c;
    return -1;
}

bool naive_has_2liec(const lir::Multigraph& g) { return g.size() == 0 || any_coloring(g, 2); }

int naive_D_lir(const lir::Multigraph& g, int max_doublings) {
    int m = g.size();
    for (int s = 0; s <= max_doublings && s <= m; ++s) {
        std::vector<int> pick(s);
        for (int i = 0; i < s; ++i) pick[i] = i;
        while (true) {
            std::vector<std::pair<int, int>> e;
            std::vector<int> mult;
            for (int i = 0; i < m; ++i) {
                auto b = g.bundle(i);
                bool d = false;
                for (int p : pick) d = d || p == i;
                e.emplace_back(b.u, b.v);
                mult.push_back(b.mult + (d ? 1 : 0));
            }
            std::vector<lir::Bundle> bs;
            for (int i = 0; i < m; ++i) bs.push_back({e[i].first, e[i].second, mult[i]});
            if (naive_has_2liec(lir::Multigraph(g.n(), bs))) return s;
            int i = s - 1;
            while (i >= 0 && pick[i] == m - s + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return -1;
}

}  // namespace ref
