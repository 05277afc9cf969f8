#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "lirlab/colorers.hpp"

namespace lir {

namespace {

using Key = std::pair<int, int>;

Key key(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

struct Partial {
    std::map<Key, Color> color;
    std::set<Key> doubled;
};

void swap_all(Partial& p) {
    for (auto& [k, c] : p.color) c = other(c);
}

void merge_into(Partial& dst, const Partial& src) {
    for (const auto& [k, c] : src.color) dst.color[k] = c;
    dst.doubled.insert(src.doubled.begin(), src.doubled.end());
}

// What the induction asks of a unicyclic piece: every edge of P_1 blue
// (the rules guarantee it) and a blue degree of v_1 other than `forbid`.
struct Requirement {
    int forbid = 0;
};

// Unicyclic piece: cycle v_1..v_n and a pendant path (possibly empty) at
// every cycle vertex. Paths longer than two are colored on a stand-in of
// length one or two with the same parity, then extended by alternating
// pairs of edges.
class Unicyclic {
public:
    Unicyclic(std::vector<int> cyc, std::vector<std::vector<int>> paths, Requirement req)
        : n_(static_cast<int>(cyc.size())), cyc_(std::move(cyc)), full_(std::move(paths)), req_(req) {
        for (const auto& p : full_) {
            int l = static_cast<int>(p.size());
            int r = l == 0 ? 0 : (l % 2 ? 1 : 2);
            short_.emplace_back(p.begin(), p.begin() + r);
        }
        for (int i = 1; i <= n_; ++i) {
            add_edge(V(i), V(i + 1));
            int prev = V(i);
            for (int w : P(i)) {
                add_edge(prev, w);
                prev = w;
            }
        }
    }

    std::optional<Partial> run() {
        rules();
        for (const auto& s : case_candidates())
            if (acceptable(s)) return expand(s);
        if (auto s = window_search()) return expand(*s);
        return std::nullopt;
    }

private:
    struct St {
        std::map<Key, Color> col;
        std::set<Key> dbl;
    };

    int V(int i) const { return cyc_[((i - 1) % n_ + n_) % n_]; }
    const std::vector<int>& P(int i) const { return short_[((i - 1) % n_ + n_) % n_]; }
    int L(int i) const { return static_cast<int>(P(i).size()); }
    Key CE(int i) const { return key(V(i), V(i + 1)); }

    std::vector<Key> path_edges(int i) const {
        std::vector<Key> out;
        int prev = V(i);
        for (int w : P(i)) {
            out.push_back(key(prev, w));
            prev = w;
        }
        return out;
    }

    void add_edge(int u, int v) {
        edges_.push_back(key(u, v));
        inc_[u].push_back(key(u, v));
        inc_[v].push_back(key(u, v));
    }

    static int deg(const St& s, const std::vector<Key>& inc, Color c) {
        int d = 0;
        for (const auto& e : inc) {
            auto it = s.col.find(e);
            if (it != s.col.end() && it->second == c) d += s.dbl.count(e) ? 2 : 1;
        }
        return d;
    }
    int deg(const St& s, int v, Color c) const { return deg(s, inc_.at(v), c); }

    void paint_path(St& s, int i, Color c) const {
        for (const auto& e : path_edges(i)) s.col[e] = c;
    }

    void rules() {
        St s;
        const Color B = Color::Blue;
        s.col[CE(n_)] = B;
        s.col[CE(1)] = B;
        paint_path(s, 1, B);
        for (int i = 2; i <= n_ - 1; ++i) {
            Color c = s.col.at(CE(i - 1));
            int d = deg(s, V(i - 1), c);
            Color edge = c, path = c;
            if (d == 1) {
                edge = path = c;
            } else if (L(i) <= 1) {
                edge = path = other(c);
            } else if (d == 2) {
                edge = path = c;
            } else {
                edge = c;
                path = other(c);
            }
            s.col[CE(i)] = edge;
            paint_path(s, i, path);
        }
        base_ = s;
    }

    std::vector<St> case_candidates() const {
        const Color R = Color::Red, B = Color::Blue;
        std::vector<St> out;
        Color c = base_.col.at(CE(n_ - 1));
        int d = deg(base_, V(n_ - 1), c);
        int ln = L(n_);
        // each candidate also in a variant with v_1v_2 doubled, which moves
        // the blue degree of v_1 to four
        auto push = [&](St s) {
            out.push_back(s);
            if (!s.dbl.count(CE(1)) && s.dbl.empty()) {
                s.dbl.insert(CE(1));
                out.push_back(s);
            }
        };
        if (c == R && d == 1 && ln == 0) {
            St s = base_;
            s.col[CE(n_)] = R;
            push(s);
        }
        if (c == B && d == 2 && ln == 0) {
            St s = base_;
            s.dbl.insert(CE(n_ - 1));
            out.push_back(s);
            Color prev = base_.col.at(CE(n_ - 2));
            if (prev == B && deg(base_, V(n_ - 2), B) == 1) {
                St t = base_;
                int dr = deg(base_, V(n_ - 3), R);
                t.col[CE(n_ - 2)] = R;
                if (dr == 2) t.dbl.insert(CE(n_ - 2));
                out.push_back(t);
            }
            if (prev == B && deg(base_, V(n_ - 2), B) == 3) {
                St t = base_;
                t.col[CE(n_ - 1)] = R;
                t.dbl.insert(CE(n_ - 1));
                out.push_back(t);
            }
            if (prev == R) {
                St t = base_;
                t.col[CE(n_ - 1)] = R;
                paint_path(t, n_ - 1, R);
                if (deg(base_, V(n_ - 2), R) == 3) t.dbl.insert(CE(n_ - 1));
                out.push_back(t);
            }
        }
        if (c == B && ln == 1 && d == 1) {
            St s = base_;
            paint_path(s, n_, B);
            St t = s;
            s.dbl.insert(CE(1));
            t.dbl.insert(CE(n_ - 1));
            out.push_back(s);
            out.push_back(t);
        }
        if (c == B && ln == 1 && (d == 2 || d == 3)) {
            St s = base_;
            paint_path(s, n_, R);
            s.col[CE(n_)] = R;
            push(s);
        }
        if (c == B && ln == 2 && d == 2) {
            St s = base_;
            paint_path(s, n_, B);
            s.dbl.insert(CE(1));
            out.push_back(s);
            St t = base_;
            paint_path(t, n_, R);
            t.col[CE(n_)] = R;
            t.dbl.insert(CE(n_));
            out.push_back(t);
        }
        if (c == R && ln == 2 && (d == 1 || d == 2)) {
            St s = base_;
            paint_path(s, n_, R);
            s.col[CE(n_)] = R;
            push(s);
        }
        if (c == R && ln == 2 && d == 3) {
            St s = base_;
            paint_path(s, n_, B);
            s.col[CE(n_)] = R;
            push(s);
        }
        // the cases needing no repair: P_n in one color
        for (Color pc : {B, R}) {
            St s = base_;
            paint_path(s, n_, pc);
            push(s);
            if (ln == 0) break;
        }
        return out;
    }

    bool acceptable(const St& s) const {
        if (s.dbl.size() > 1) return false;
        for (const auto& e : path_edges(1))
            if (s.col.at(e) != Color::Blue) return false;
        std::map<int, int> local;
        for (const auto& [u, v] : edges_) {
            local.emplace(u, static_cast<int>(local.size()));
            local.emplace(v, static_cast<int>(local.size()));
        }
        std::vector<PlanEdge> pe;
        for (const auto& e : edges_) {
            auto it = s.col.find(e);
            if (it == s.col.end()) return false;
            pe.push_back({local[e.first], local[e.second], it->second, s.dbl.count(e) > 0});
        }
        if (!verify_plan(make_plan(static_cast<int>(local.size()), pe)).ok) return false;
        return req_.forbid == 0 || deg(s, V(1), Color::Blue) != req_.forbid;
    }

    // Recolor the edges around v_n and try at most one doubling there,
    // keeping the rest of the rule coloring.
    std::optional<St> window_search() const {
        std::vector<Key> cyc_edges;
        for (int i : {n_ - 2, n_ - 1, n_, 1})
            if (std::find(cyc_edges.begin(), cyc_edges.end(), CE(i)) == cyc_edges.end()) cyc_edges.push_back(CE(i));
        std::vector<Key> free = cyc_edges;
        for (int i : {n_ - 1, n_})
            if ((i - 1) % n_ != 0)
                for (const auto& e : path_edges(i))
                    if (std::find(free.begin(), free.end(), e) == free.end()) free.push_back(e);
        int w = static_cast<int>(free.size());
        for (int dbl = -1; dbl < static_cast<int>(cyc_edges.size()); ++dbl)
            for (int mask = 0; mask < (1 << w); ++mask) {
                St s = base_;
                for (int b = 0; b < w; ++b) s.col[free[b]] = (mask >> b & 1) ? Color::Blue : Color::Red;
                if (dbl >= 0) s.dbl.insert(cyc_edges[dbl]);
                if (acceptable(s)) return s;
            }
        return std::nullopt;
    }

    Partial expand(const St& s) const {
        Partial p;
        p.color = s.col;
        p.doubled = s.dbl;
        for (int i = 0; i < n_; ++i) {
            const auto& full = full_[i];
            int r = static_cast<int>(short_[i].size());
            if (r == static_cast<int>(full.size())) continue;
            int a = r >= 2 ? full[r - 2] : cyc_[i];
            Color c = s.col.at(key(a, full[r - 1]));
            int prev = full[r - 1];
            for (int j = r; j < static_cast<int>(full.size()); j += 2) {
                c = other(c);
                p.color[key(prev, full[j])] = c;
                p.color[key(full[j], full[j + 1])] = c;
                prev = full[j + 1];
            }
        }
        return p;
    }

    int n_;
    std::vector<int> cyc_;
    std::vector<std::vector<int>> full_, short_;
    Requirement req_;
    std::vector<Key> edges_;
    std::map<int, std::vector<Key>> inc_;
    St base_;
};

class CactusColorer {
public:
    CactusColorer(const TauStarLayout& layout) : next_fake_(layout.graph.n()) {}

    Partial solve(const std::set<Key>& edges, const std::vector<std::vector<int>>& cycles) {
        auto adj = adjacency(edges);
        if (cycles.size() == 1) {
            const auto& c = cycles[0];
            int v1 = -1;
            for (int v : c)
                if (adj[v].size() == 3) {
                    v1 = v;
                    break;
                }
            if (v1 < 0) throw Error("internal: unicyclic piece is a bare cycle");
            return unicyclic(c, adj, v1, {}, {});
        }
        std::map<int, int> cycle_of;
        for (int i = 0; i < static_cast<int>(cycles.size()); ++i)
            for (int v : cycles[i]) cycle_of[v] = i;
        // a pendant cycle has exactly one vertex whose branch reaches another cycle
        for (int ci = 0; ci < static_cast<int>(cycles.size()); ++ci) {
            const auto& C = cycles[ci];
            std::set<int> on_c(C.begin(), C.end());
            int vc = -1, count = 0;
            for (int v : C)
                for (int w : adj[v])
                    if (!on_c.count(w) && branch_reaches_cycle(adj, v, w, cycle_of, ci)) {
                        vc = v;
                        ++count;
                    }
            if (count != 1) continue;
            return split_at(edges, cycles, ci, vc, adj, cycle_of);
        }
        throw Error("internal: no pendant cycle found");
    }

    int fake() { return next_fake_++; }

private:
    using Adj = std::map<int, std::vector<int>>;

    static Adj adjacency(const std::set<Key>& edges) {
        Adj a;
        for (auto [u, v] : edges) {
            a[u].push_back(v);
            a[v].push_back(u);
        }
        for (auto& [v, l] : a) std::sort(l.begin(), l.end());
        return a;
    }

    static bool branch_reaches_cycle(const Adj& adj, int from, int start, const std::map<int, int>& cycle_of, int own) {
        std::set<int> seen{from, start};
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            auto it = cycle_of.find(v);
            if (it != cycle_of.end() && it->second != own) return true;
            for (int w : adj.at(v))
                if (seen.insert(w).second) stack.push_back(w);
        }
        return false;
    }

    // The pendant path hanging at cycle vertex v, skipping `avoid`.
    static std::vector<int> hanging_path(const Adj& adj, const std::set<int>& on_c, int v, int avoid) {
        std::vector<int> out;
        int prev = v, cur = -1;
        for (int w : adj.at(v))
            if (!on_c.count(w) && w != avoid) cur = w;
        while (cur >= 0) {
            out.push_back(cur);
            int nxt = -1;
            for (int w : adj.at(cur))
                if (w != prev) nxt = w;
            prev = cur;
            cur = nxt;
        }
        return out;
    }

    Partial unicyclic(const std::vector<int>& C, const Adj& adj, int v1, std::vector<int> p1, Requirement req) {
        std::set<int> on_c(C.begin(), C.end());
        int at = static_cast<int>(std::find(C.begin(), C.end(), v1) - C.begin());
        int n = static_cast<int>(C.size());
        for (int dir : {1, -1}) {
            std::vector<int> cyc;
            std::vector<std::vector<int>> paths;
            for (int i = 0; i < n; ++i) {
                int v = C[((at + dir * i) % n + n) % n];
                cyc.push_back(v);
                paths.push_back(i == 0 && !p1.empty() ? p1 : hanging_path(adj, on_c, v, -1));
            }
            Unicyclic u(cyc, paths, req);
            if (auto p = u.run()) return *p;
        }
        throw Error("color_special_cactus: unicyclic piece admits no coloring of the required form");
    }

    Partial split_at(const std::set<Key>& edges, const std::vector<std::vector<int>>& cycles, int ci, int vc,
                     const Adj& adj, const std::map<int, int>& cycle_of) {
        const auto& C = cycles[ci];
        std::set<int> on_c(C.begin(), C.end());
        // walk the connecting path from v_C to the cycle of v_R
        std::vector<int> P{vc};
        for (int w : adj.at(vc))
            if (!on_c.count(w)) P.push_back(w);
        while (!cycle_of.count(P.back())) {
            int cur = P.back(), prev = P[P.size() - 2];
            for (int w : adj.at(cur))
                if (w != prev) {
                    P.push_back(w);
                    break;
                }
        }
        int ell = static_cast<int>(P.size()) - 1;
        // C with its pendant paths
        std::set<Key> g1;
        for (int i = 0; i < static_cast<int>(C.size()); ++i) g1.insert(key(C[i], C[(i + 1) % C.size()]));
        for (int v : C) {
            if (v == vc) continue;
            int prev = v;
            for (int w : hanging_path(adj, on_c, v, -1)) {
                g1.insert(key(prev, w));
                prev = w;
            }
        }
        std::set<Key> g2;
        for (const auto& e : edges)
            if (!g1.count(e)) g2.insert(e);
        std::vector<std::vector<int>> rest;
        for (int i = 0; i < static_cast<int>(cycles.size()); ++i)
            if (i != ci) rest.push_back(cycles[i]);
        int u = P[1];
        if (ell >= 2) {
            g2.erase(key(vc, u));
            auto phi = solve(g2, rest);
            if (phi.color.at(key(u, P[2])) != Color::Red) swap_all(phi);
            g1.insert(key(vc, u));
            auto psi = unicyclic(C, adjacency(g1), vc, {u}, {});
            merge_into(phi, psi);
            return phi;
        }
        int vr = u;
        auto phi = solve(g2, rest);
        if (phi.color.at(key(vc, vr)) != Color::Blue) swap_all(phi);
        int q = 0;
        for (const auto& [e, c] : phi.color)
            if ((e.first == vr || e.second == vr) && c == Color::Blue) q += phi.doubled.count(e) ? 2 : 1;
        g1.insert(key(vc, vr));
        Partial psi;
        if (q == 2) {
            int x = fake();
            g1.insert(key(vr, x));
            psi = unicyclic(C, adjacency(g1), vc, {vr, x}, {2});
            psi.color.erase(key(vr, x));
        } else {
            psi = unicyclic(C, adjacency(g1), vc, {vr}, {q});
        }
        psi.color.erase(key(vc, vr));
        merge_into(phi, psi);
        return phi;
    }

    int next_fake_;
};

}  // namespace

DoublingPlan color_special_cactus(const TauStarScript& script) {
    auto layout = build_taustar(script);
    if (script.steps.empty()) throw Error("color_special_cactus: the graph is a cycle; use color_cycle");
    std::set<Key> edges;
    for (const auto& b : layout.graph.bundles()) edges.insert(key(b.u, b.v));
    CactusColorer cc(layout);
    auto p = cc.solve(edges, layout.cycles);
    std::vector<PlanEdge> pe;
    for (const auto& e : edges) pe.push_back({e.first, e.second, p.color.at(e), p.doubled.count(e) > 0});
    return checked(make_plan(layout.graph.n(), pe), "color_special_cactus");
}

}  // namespace lir
