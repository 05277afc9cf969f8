#include <algorithm>
#include <functional>

#include "lirlab/colorers.hpp"

namespace lir {

DoublingPlan make_plan(int n, const std::vector<PlanEdge>& edges) {
    std::vector<std::pair<int, int>> e;
    for (const auto& x : edges) e.emplace_back(x.u, x.v);
    DoublingPlan p;
    p.base = simple_graph(n, e);
    ColoringBuilder cb(p.base);
    for (const auto& x : edges) {
        cb.set(x.u, x.v, x.color);
        if (x.doubled) p.doubled.push_back(p.base.bundle_index(x.u, x.v));
    }
    std::sort(p.doubled.begin(), p.doubled.end());
    p.coloring = cb.take();
    return p;
}

std::vector<PlanEdge> plan_edges(const DoublingPlan& p) {
    std::vector<PlanEdge> out;
    std::vector<bool> dbl(p.base.size(), false);
    for (int i : p.doubled) dbl[i] = true;
    for (int i = 0; i < p.base.size(); ++i)
        out.push_back({p.base.bundle(i).u, p.base.bundle(i).v, p.coloring[i], static_cast<bool>(dbl[i])});
    return out;
}

DoublingPlan checked(DoublingPlan p, const char* who) {
    if (!verify_plan(p).ok) throw Error(std::string(who) + ": construction failed to verify");
    return p;
}

// Edge i joins i and i+1; pieces of two edges alternate colors.
DoublingPlan color_path(int n) {
    if (n < 3) throw Error("color_path needs n >= 3");
    std::vector<PlanEdge> e;
    int i = 0;
    Color c = Color::Red;
    if (n % 2 == 0) {
        e.push_back({0, 1, c, true});
        e.push_back({1, 2, c});
        e.push_back({2, 3, c});
        i = 3;
        c = other(c);
    }
    for (; i < n - 1; i += 2) {
        e.push_back({i, i + 1, c});
        e.push_back({i + 1, i + 2, c});
        c = other(c);
    }
    return checked(make_plan(n, e), "color_path");
}

DoublingPlan color_cycle(int n) {
    if (n < 4) throw Error("color_cycle needs n >= 4");
    // first piece: its length in edges and which of its edges are doubled
    int len = 2;
    std::vector<int> dbl;
    switch (n % 4) {
        case 1: len = 3, dbl = {0}; break;
        case 2: len = 4, dbl = {0, 1}; break;
        case 3: len = 5, dbl = {1, 2}; break;
        default: break;
    }
    std::vector<PlanEdge> e;
    Color c = Color::Red;
    for (int i = 0; i < len; ++i)
        e.push_back({i, (i + 1) % n, c, std::find(dbl.begin(), dbl.end(), i) != dbl.end()});
    for (int i = len; i < n; i += 2) {
        c = other(c);
        e.push_back({i, (i + 1) % n, c});
        e.push_back({i + 1, (i + 2) % n, c});
    }
    return checked(make_plan(n, e), "color_cycle");
}

namespace {

void require_tree(const Multigraph& t) {
    if (!t.is_simple() || !t.connected() || t.size() != t.n() - 1) throw Error("input is not a tree");
}

class TreeDP {
public:
    explicit TreeDP(const Multigraph& t) : t_(t), n_(t.n()) {
        int maxdeg = 0;
        for (int v = 0; v < n_; ++v) maxdeg = std::max(maxdeg, static_cast<int>(t.incident(v).size()));
        width_ = maxdeg + 2;
        memo_.assign(static_cast<size_t>(n_) * 2 * width_, -1);
        parent_.assign(n_, -1);
    }

    void root_at(int r) {
        root_ = r;
        std::fill(memo_.begin(), memo_.end(), -1);
        parent_.assign(n_, -1);
        std::vector<int> stack{r};
        std::vector<bool> seen(n_, false);
        seen[r] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, b] : t_.incident(v))
                if (!seen[w]) {
                    seen[w] = true;
                    parent_[w] = v;
                    stack.push_back(w);
                }
        }
    }

    std::vector<int> children(int v) const {
        std::vector<int> c;
        for (auto [w, b] : t_.incident(v))
            if (w != parent_[v]) c.push_back(w);
        return c;
    }

    // Subtree of v, parent edge colored pc (-1 for none), parent's degree in
    // pc equal to dp.
    bool ok(int v, int pc, int dp) { return pick(v, pc, dp, nullptr); }

    void paint(int v, int pc, int dp, EdgeColoring& out) {
        if (!pick(v, pc, dp, &out)) throw Error("internal: tree coloring reconstruction failed");
    }

private:
    bool pick(int v, int pc, int dp, EdgeColoring* out) {
        int8_t* slot = nullptr;
        if (pc >= 0 && !out) {
            slot = &memo_[(static_cast<size_t>(v) * 2 + pc) * width_ + std::min(dp, width_ - 1)];
            if (*slot >= 0) return *slot;
        }
        auto ch = children(v);
        int k = static_cast<int>(ch.size());
        bool found = false;
        for (int a = k; a >= 0 && !found; --a) {
            int dr = a + (pc == 0), db = (k - a) + (pc == 1);
            if (pc == 0 && dr == dp) continue;
            if (pc == 1 && db == dp) continue;
            int only_r = 0, flex = 0;
            bool dead = false;
            std::vector<int> kind(k);
            for (int i = 0; i < k && !dead; ++i) {
                bool r = ok(ch[i], 0, dr), b = ok(ch[i], 1, db);
                if (!r && !b) dead = true;
                kind[i] = r && b ? 2 : (r ? 0 : 1);
                if (kind[i] == 0) ++only_r;
                if (kind[i] == 2) ++flex;
            }
            if (dead || a < only_r || a > only_r + flex) continue;
            found = true;
            if (out) {
                int extra = a - only_r;
                for (int i = 0; i < k; ++i) {
                    int c = kind[i];
                    if (c == 2) c = extra-- > 0 ? 0 : 1;
                    (*out)[t_.bundle_index(v, ch[i])] = c == 0 ? Color::Red : Color::Blue;
                    paint(ch[i], c, c == 0 ? dr : db, *out);
                }
            }
        }
        if (slot) *slot = found;
        return found;
    }

    const Multigraph& t_;
    int n_;
    int width_ = 0;
    int root_ = 0;
    std::vector<int8_t> memo_;
    std::vector<int> parent_;
};

}  // namespace

std::optional<EdgeColoring> tree_2liec(const Multigraph& tree) {
    require_tree(tree);
    if (tree.size() == 0) return EdgeColoring{};
    TreeDP dp(tree);
    dp.root_at(0);
    if (!dp.ok(0, -1, 0)) return std::nullopt;
    EdgeColoring c(tree.size(), Color::Red);
    dp.paint(0, -1, 0, c);
    if (!verify_liec(tree, c).ok) throw Error("internal: tree 2-liec failed to verify");
    return c;
}

EdgeColoring two_aliec_shrub(const Multigraph& tree, int root) {
    require_tree(tree);
    if (root < 0 || root >= tree.n() || tree.incident(root).size() != 1) throw Error("shrub root must be a pendant vertex");
    int u = tree.incident(root)[0].first;
    int rb = tree.incident(root)[0].second;
    TreeDP dp(tree);
    dp.root_at(root);
    EdgeColoring c(tree.size(), Color::Red);
    c[rb] = Color::Red;
    if (dp.ok(u, 0, 1)) {
        dp.paint(u, 0, 1, c);
        return c;
    }
    // the root edge alone in red, every other edge at u blue
    auto ch = dp.children(u);
    int k = static_cast<int>(ch.size());
    for (int w : ch)
        if (!dp.ok(w, 1, k)) throw Error("internal: shrub admits no 2-aliec");
    for (int w : ch) {
        c[tree.bundle_index(u, w)] = Color::Blue;
        dp.paint(w, 1, k, c);
    }
    return c;
}

DoublingPlan color_tree(const Multigraph& tree) {
    require_tree(tree);
    if (tree.n() < 3) throw Error("color_tree needs at least three vertices");
    if (auto c = tree_2liec(tree)) return checked(DoublingPlan{tree, {}, *c}, "color_tree");
    int x = 0;
    while (tree.incident(x).size() != 1) ++x;
    auto c = two_aliec_shrub(tree, x);
    int u = tree.incident(x)[0].first;
    int ux = tree.bundle_index(u, x);
    auto blue = color_degrees(tree, c);
    c[ux] = Color::Blue;
    int du = static_cast<int>(tree.incident(u).size());
    // Repair order: when deg u = 3 a neighbor of blue degree
    // four gets the doubling instead of ux; a degree-four u falls through
    // to the same candidate list.
    std::vector<int> tries;
    if (du == 3)
        for (auto [v, b] : tree.incident(u))
            if (v != x && blue[v].blue == 4) tries.push_back(b);
    tries.push_back(ux);
    for (auto [v, b] : tree.incident(u))
        if (std::find(tries.begin(), tries.end(), b) == tries.end()) tries.push_back(b);
    for (int b : tries) {
        DoublingPlan p{tree, {b}, c};
        if (verify_plan(p).ok) return p;
    }
    throw Error("color_tree: no repair verified");
}

}  // namespace lir
