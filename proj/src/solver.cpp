#include "lirlab/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstring>
#include <fstream>
#include <map>
#include <set>
#include <tuple>
#include <unordered_set>

#include "lirlab/families.hpp"

namespace lir {

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Found: return "found";
        case SolveStatus::ExhaustedNoSolution: return "exhausted";
        case SolveStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

Clock::time_point deadline_after(double seconds) {
    if (seconds <= 0) return Clock::now();
    if (seconds > 1e8) seconds = 1e8;
    return Clock::now() + std::chrono::microseconds(static_cast<long long>(seconds * 1e6));
}

double seconds_left(Clock::time_point d) {
    return std::chrono::duration<double>(d - Clock::now()).count();
}

// Greedy max-adjacency order: start at a max-degree vertex, then keep taking
// the vertex with most bundles into the ordered prefix. Leaves go last.
std::vector<int> completion_order(const Multigraph& m, const std::vector<bool>& leaf) {
    int n = m.n();
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    std::vector<int> links(n, 0);
    auto degs = m.degrees();
    int inner = 0;
    for (int v = 0; v < n; ++v)
        if (!leaf[v]) ++inner;
    for (int step = 0; step < inner; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v] || leaf[v]) continue;
            if (best < 0 || std::tie(links[v], degs[v]) > std::tie(links[best], degs[best])) best = v;
        }
        placed[best] = true;
        order.push_back(best);
        for (auto [w, b] : m.incident(best)) ++links[w];
    }
    for (int v = 0; v < n; ++v)
        if (leaf[v]) order.push_back(v);
    return order;
}

class TwoLiec {
public:
    TwoLiec(const Multigraph& m, const SolveBudget& budget, const BranchHooks* hooks)
        : m_(m), n_(m.n()), budget_(budget), hooks_(hooks) {}

    TwoLiecResult run() {
        deadline_ = deadline_after(budget_.seconds);
        setup();
        TwoLiecResult res;
        bool ok = vertex(0);
        res.nodes = nodes_;
        if (ok) {
            EdgeColoring c(m_.size());
            for (int b = 0; b < m_.size(); ++b) c[b] = solution_[b] == 0 ? Color::Red : Color::Blue;
            if (!verify_liec(m_, c).ok) throw Error("internal: 2-liec search produced an invalid coloring");
            res.status = SolveStatus::Found;
            res.coloring = std::move(c);
        } else {
            res.status = aborted_ ? SolveStatus::BudgetExceeded : SolveStatus::ExhaustedNoSolution;
        }
        return res;
    }

private:
    struct Item {
        int bundle;
        int to;
        int weight;
    };
    struct LeafGroup {
        std::vector<Item> items;
        int weight;
    };

    void setup() {
        tot_ = m_.degrees();
        std::vector<bool> leaf(n_, false);
        for (int v = 0; v < n_; ++v) {
            const auto& inc = m_.incident(v);
            leaf[v] = inc.size() == 1 && m_.incident(inc[0].first).size() > 1;
        }
        order_ = completion_order(m_, leaf);
        pos_.assign(n_, 0);
        for (int i = 0; i < n_; ++i) pos_[order_[i]] = i;

        items_.assign(n_, {});
        groups_.assign(n_, {});
        for (int v = 0; v < n_; ++v) {
            std::map<int, LeafGroup> by_weight;
            for (auto [w, b] : m_.incident(v)) {
                if (pos_[w] < pos_[v]) continue;
                Item it{b, w, m_.bundle(b).mult};
                if (leaf[w]) {
                    auto& g = by_weight[it.weight];
                    g.weight = it.weight;
                    g.items.push_back(it);
                } else {
                    items_[v].push_back(it);
                }
            }
            for (auto& [wt, g] : by_weight) groups_[v].push_back(g);
        }
        suffix_.assign(n_, {});
        for (int v = 0; v < n_; ++v) {
            int k = static_cast<int>(items_[v].size()), g = static_cast<int>(groups_[v].size());
            suffix_[v].assign(k + g + 1, 0);
            for (int i = k + g - 1; i >= 0; --i) {
                int w = i < k ? items_[v][i].weight
                              : groups_[v][i - k].weight * static_cast<int>(groups_[v][i - k].items.size());
                suffix_[v][i] = suffix_[v][i + 1] + w;
            }
        }

        // Cliques of equal total degree: their red degrees must be pairwise distinct.
        clique_of_.assign(n_, -1);
        for (int i = 0; i < n_; ++i) {
            int v = order_[i];
            if (leaf[v] || clique_of_[v] >= 0) continue;
            std::vector<int> c{v};
            for (int j = i + 1; j < n_; ++j) {
                int u = order_[j];
                if (leaf[u] || clique_of_[u] >= 0 || tot_[u] != tot_[v]) continue;
                bool all = std::all_of(c.begin(), c.end(), [&](int x) { return m_.adjacent(u, x); });
                if (all) c.push_back(u);
            }
            if (c.size() >= 3) {
                for (int x : c) clique_of_[x] = static_cast<int>(cliques_.size());
                cliques_.push_back(c);
            }
        }

        // Twins (same multiplicity to every third vertex) are interchangeable.
        std::vector<std::vector<int>> mult(n_, std::vector<int>(n_, 0));
        for (const auto& b : m_.bundles()) mult[b.u][b.v] = mult[b.v][b.u] = b.mult;
        prev_twin_.assign(n_, -1);
        for (int i = 0; i < n_; ++i) {
            int v = order_[i];
            if (leaf[v]) continue;
            for (int j = i - 1; j >= 0 && prev_twin_[v] < 0; --j) {
                int u = order_[j];
                if (leaf[u]) continue;
                bool twin = true;
                for (int x = 0; x < n_ && twin; ++x)
                    if (x != u && x != v && mult[u][x] != mult[v][x]) twin = false;
                if (twin) prev_twin_[v] = u;
            }
        }
        twin_root_.assign(n_, 0);
        for (int i = 0; i < n_; ++i) {
            int v = order_[i];
            twin_root_[v] = prev_twin_[v] >= 0 ? twin_root_[prev_twin_[v]] : v;
        }

        chosen_.assign(n_, 0);
        red_.assign(n_, 0);
        colored_.assign(n_, 0);
        done_.assign(n_, false);
        forb_.assign(n_, {});
        for (int v = 0; v < n_; ++v) forb_[v].assign(tot_[v] + 1, 0);
        col_.assign(m_.size(), -1);
    }

    bool tick() {
        ++nodes_;
        if (nodes_ > budget_.node_limit) aborted_ = true;
        if ((nodes_ & 4095) == 0 && Clock::now() > deadline_) aborted_ = true;
        return !aborted_;
    }

    bool feasible(int w) const {
        int lo = red_[w], hi = red_[w] + tot_[w] - colored_[w];
        for (int x = lo; x <= hi; ++x)
            if (forb_[w][x] == 0) return true;
        return false;
    }

    int forbidden_for(int v, int w, bool red, int r) const {
        return red ? r : tot_[w] - (tot_[v] - r);
    }

    void paint(int v, const Item& it, bool red, int r) {
        col_[it.bundle] = red ? 0 : 1;
        colored_[it.to] += it.weight;
        if (red) red_[it.to] += it.weight;
        int f = forbidden_for(v, it.to, red, r);
        if (f >= 0 && f <= tot_[it.to]) ++forb_[it.to][f];
    }

    void unpaint(int v, const Item& it, bool red, int r) {
        int f = forbidden_for(v, it.to, red, r);
        if (f >= 0 && f <= tot_[it.to]) --forb_[it.to][f];
        if (red) red_[it.to] -= it.weight;
        colored_[it.to] -= it.weight;
        col_[it.bundle] = -1;
    }

    bool augment(int u, const std::vector<std::vector<int>>& dom, std::vector<int>& owner, std::vector<int>& seen,
                 int stamp) {
        for (int x : dom[u]) {
            if (seen[x] == stamp) continue;
            seen[x] = stamp;
            if (owner[x] < 0 || augment(owner[x], dom, owner, seen, stamp)) {
                owner[x] = u;
                return true;
            }
        }
        return false;
    }

    bool hall_ok(int ci) {
        const auto& c = cliques_[ci];
        int k = static_cast<int>(c.size());
        int top = tot_[c[0]];
        std::vector<std::vector<int>> dom(k);
        for (int i = 0; i < k; ++i) {
            int u = c[i];
            if (done_[u]) {
                dom[i].push_back(chosen_[u]);
                continue;
            }
            for (int x = red_[u]; x <= red_[u] + tot_[u] - colored_[u]; ++x)
                if (forb_[u][x] == 0) dom[i].push_back(x);
        }
        std::vector<int> owner(top + 1, -1), seen(top + 1, -1);
        for (int i = 0; i < k; ++i)
            if (!augment(i, dom, owner, seen, i)) return false;
        return true;
    }

    bool after_assign(int i, int v) {
        done_[v] = true;
        bool ok = true;
        std::vector<int> touched;
        if (clique_of_[v] >= 0) touched.push_back(clique_of_[v]);
        for (const auto& it : items_[v])
            if (clique_of_[it.to] >= 0) touched.push_back(clique_of_[it.to]);
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (int ci : touched)
            if (!hall_ok(ci)) {
                ok = false;
                break;
            }
        if (ok) {
            if (i == 0) {
                int b = branch_++;
                if (hooks_ && hooks_->skip && hooks_->skip(b)) {
                    ok = false;
                } else {
                    ok = vertex(i + 1);
                    if (!ok && !aborted_ && hooks_ && hooks_->done) hooks_->done(b);
                }
            } else {
                ok = vertex(i + 1);
            }
        }
        done_[v] = false;
        return ok;
    }

    // Assign forward bundles of v (items, then leaf groups) so that exactly
    // `need` more red weight arrives at v.
    bool assign(int i, int v, int r, int idx, int need) {
        if (!tick()) return false;
        if (need < 0 || need > suffix_[v][idx]) return false;
        int k = static_cast<int>(items_[v].size());
        int total = k + static_cast<int>(groups_[v].size());
        if (idx == total) return need == 0 && after_assign(i, v);
        if (idx < k) {
            const auto& it = items_[v][idx];
            for (bool red : {true, false}) {
                if (red && it.weight > need) continue;
                paint(v, it, red, r);
                bool ok = feasible(it.to) && assign(i, v, r, idx + 1, need - (red ? it.weight : 0));
                unpaint(v, it, red, r);
                if (ok) return true;
                if (aborted_) return false;
            }
            return false;
        }
        const auto& g = groups_[v][idx - k];
        int cnt = static_cast<int>(g.items.size());
        for (int reds = std::min(cnt, need / g.weight); reds >= 0; --reds) {
            bool fine = true;
            int j = 0;
            for (; j < cnt; ++j) {
                paint(v, g.items[j], j < reds, r);
                if (!feasible(g.items[j].to)) {
                    fine = false;
                    ++j;
                    break;
                }
            }
            bool ok = fine && assign(i, v, r, idx + 1, need - reds * g.weight);
            for (int q = j - 1; q >= 0; --q) unpaint(v, g.items[q], q < reds, r);
            if (ok) return true;
            if (aborted_) return false;
        }
        return false;
    }

    // Everything the rest of the search depends on once vertices before i
    // are finished: remaining red degrees and forbidden values, and the
    // values already taken in each clique. Failed states are remembered.
    bool state_key(int i, std::string& key) const {
        key.clear();
        auto put = [&](std::uint64_t x) { key.append(reinterpret_cast<const char*>(&x), sizeof x); };
        put(static_cast<std::uint64_t>(i));
        std::vector<std::array<std::uint64_t, 2>> rest;
        for (int j = i; j < n_; ++j) {
            int w = order_[j];
            if (tot_[w] > 63) return false;
            std::uint64_t mask = 0;
            for (int x = 0; x <= tot_[w]; ++x)
                if (forb_[w][x]) mask |= std::uint64_t{1} << x;
            rest.push_back({static_cast<std::uint64_t>(twin_root_[w]) << 32 | static_cast<std::uint64_t>(red_[w]), mask});
        }
        // twins still to come are interchangeable, so their order does not matter
        std::sort(rest.begin(), rest.end());
        for (const auto& [a, b] : rest) {
            put(a);
            put(b);
        }
        for (const auto& c : cliques_) {
            std::uint64_t used = 0;
            bool open = false;
            for (int u : c) {
                if (done_[u]) used |= std::uint64_t{1} << chosen_[u];
                else open = true;
            }
            if (open) put(used);
        }
        return true;
    }

    bool vertex(int i) {
        if (i == n_) {
            solution_ = col_;
            return true;
        }
        std::string key;
        bool memo = i > 0 && state_key(i, key);
        if (memo && failed_.count(key)) return false;
        bool ok = vertex_body(i);
        if (memo && !ok && !aborted_ && failed_.size() < kMemoLimit) failed_.insert(std::move(key));
        return ok;
    }

    bool vertex_body(int i) {
        int v = order_[i];
        int lo = red_[v], hi = red_[v] + tot_[v] - colored_[v];
                // descending red degree first: a heuristic, and at the root the
        // color swap symmetry keeps only the upper half
        for (int r = hi; r >= lo; --r) {
            if (forb_[v][r]) continue;
            if (i == 0 && 2 * r < tot_[v]) continue;
            chosen_[v] = r;
            if (assign(i, v, r, 0, r - lo)) return true;
            if (aborted_) return false;
        }
        return false;
    }

    const Multigraph& m_;
    int n_;
    SolveBudget budget_;
    const BranchHooks* hooks_;
    Clock::time_point deadline_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    int branch_ = 0;

    std::vector<int> tot_, order_, pos_;
    std::vector<std::vector<Item>> items_;
    std::vector<std::vector<LeafGroup>> groups_;
    std::vector<std::vector<int>> suffix_;
    std::vector<std::vector<int>> cliques_;
    std::vector<int> clique_of_, prev_twin_, chosen_, twin_root_;
    static constexpr std::size_t kMemoLimit = 500'000;
    std::unordered_set<std::string> failed_;
    std::vector<int> red_, colored_;
    std::vector<bool> done_;
    std::vector<std::vector<int>> forb_;
    std::vector<int> col_, solution_;
};

// Plain k-liec search over bundles in completion order, colors in
// restricted-growth form so permuted colorings are visited once.
class KLiec {
public:
    KLiec(const Multigraph& g, int k, std::uint64_t node_limit, Clock::time_point deadline)
        : g_(g), k_(k), n_(g.n()), node_limit_(node_limit), deadline_(deadline) {
        std::vector<bool> none(n_, false);
        auto order = completion_order(g, none);
        std::vector<int> pos(n_);
        for (int i = 0; i < n_; ++i) pos[order[i]] = i;
        for (int b = 0; b < g.size(); ++b) seq_.push_back(b);
        std::sort(seq_.begin(), seq_.end(), [&](int a, int b) {
            const auto &x = g.bundle(a), &y = g.bundle(b);
            auto kx = std::pair(std::max(pos[x.u], pos[x.v]), std::min(pos[x.u], pos[x.v]));
            auto ky = std::pair(std::max(pos[y.u], pos[y.v]), std::min(pos[y.u], pos[y.v]));
            return kx < ky;
        });
        deg_.assign(static_cast<size_t>(k) * n_, 0);
        rem_.assign(n_, 0);
        for (int v = 0; v < n_; ++v) rem_[v] = static_cast<int>(g.incident(v).size());
        col_.assign(g.size(), -1);
    }

    bool run() { return step(0, -1); }
    bool aborted() const { return aborted_; }
    std::uint64_t nodes() const { return nodes_; }
    const std::vector<int>& coloring() const { return col_; }

private:
    int& deg(int c, int v) { return deg_[static_cast<size_t>(c) * n_ + v]; }

    bool complete_ok(int x) {
        for (auto [y, b] : g_.incident(x)) {
            if (rem_[y] != 0) continue;
            int c = col_[b];
            if (deg(c, x) == deg(c, y)) return false;
        }
        return true;
    }

    bool step(int idx, int maxc) {
        ++nodes_;
        if (nodes_ > node_limit_ || ((nodes_ & 4095) == 0 && Clock::now() > deadline_)) aborted_ = true;
        if (aborted_) return false;
        if (idx == static_cast<int>(seq_.size())) return true;
        int b = seq_[idx];
        const auto& e = g_.bundle(b);
        for (int c = 0; c <= std::min(k_ - 1, maxc + 1); ++c) {
            col_[b] = c;
            deg(c, e.u) += e.mult;
            deg(c, e.v) += e.mult;
            --rem_[e.u];
            --rem_[e.v];
            bool ok = (rem_[e.u] != 0 || complete_ok(e.u)) && (rem_[e.v] != 0 || complete_ok(e.v)) &&
                      step(idx + 1, std::max(maxc, c));
            ++rem_[e.u];
            ++rem_[e.v];
            deg(c, e.u) -= e.mult;
            deg(c, e.v) -= e.mult;
            if (ok) return true;
            col_[b] = -1;
            if (aborted_) return false;
        }
        return false;
    }

    const Multigraph& g_;
    int k_, n_;
    std::uint64_t node_limit_;
    Clock::time_point deadline_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<int> seq_, deg_, rem_, col_;
};

bool valid_liec(const Multigraph& g, const std::vector<int>& col) {
    int k = col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
    for (int c = 0; c < k; ++c) {
        std::vector<int> d(g.n(), 0);
        for (int b = 0; b < g.size(); ++b)
            if (col[b] == c) {
                d[g.bundle(b).u] += g.bundle(b).mult;
                d[g.bundle(b).v] += g.bundle(b).mult;
            }
        for (int b = 0; b < g.size(); ++b)
            if (col[b] == c && d[g.bundle(b).u] == d[g.bundle(b).v]) return false;
    }
    return true;
}

void check_doubling_input(const Multigraph& g) {
    if (!g.connected()) throw Error("graph must be connected");
    if (!g.is_simple()) throw Error("doubling search needs a simple graph");
    if (g.n() == 2 && g.size() == 1) throw Error("K2 has no finite doubling number");
    if (g.n() == 3 && g.size() == 3) throw Error("K3 has no finite doubling number");
}

}  // namespace

TwoLiecResult search_2liec(const Multigraph& m, const SolveBudget& budget, const BranchHooks* hooks) {
    return TwoLiec(m, budget, hooks).run();
}

std::optional<EdgeColoring> exists_2liec(const Multigraph& m, const SolveBudget& budget) {
    auto r = search_2liec(m, budget);
    if (r.status == SolveStatus::BudgetExceeded) throw Error("2-liec search exceeded its budget");
    return r.coloring;
}

SolveResult exact_lir(const Multigraph& g, const SolveBudget& budget) {
    if (!g.connected()) throw Error("graph must be connected");
    SolveResult res;
    auto deadline = deadline_after(budget.seconds);
    if (g.size() == 0 || is_locally_irregular(g)) {
        res.status = SolveStatus::Found;
        res.value = g.size() == 0 ? 0 : 1;
        res.coloring.assign(g.size(), 0);
        return res;
    }
    for (int c = 2; c <= budget.max_colors; ++c) {
        if (c == 2) {
            SolveBudget b = budget;
            b.seconds = seconds_left(deadline);
            auto r = search_2liec(g, b);
            res.nodes += r.nodes;
            if (r.status == SolveStatus::BudgetExceeded) {
                res.status = SolveStatus::BudgetExceeded;
                return res;
            }
            if (r.coloring) {
                res.status = SolveStatus::Found;
                res.value = 2;
                for (Color x : *r.coloring) res.coloring.push_back(x == Color::Red ? 0 : 1);
                return res;
            }
            continue;
        }
        KLiec s(g, c, budget.node_limit, deadline);
        bool ok = s.run();
        res.nodes += s.nodes();
        if (s.aborted()) {
            res.status = SolveStatus::BudgetExceeded;
            return res;
        }
        if (ok) {
            if (!valid_liec(g, s.coloring())) throw Error("internal: k-liec search produced an invalid coloring");
            res.status = SolveStatus::Found;
            res.value = c;
            res.coloring = s.coloring();
            return res;
        }
    }
    res.status = SolveStatus::ExhaustedNoSolution;
    return res;
}

std::vector<std::vector<int>> doubling_orbits(const Multigraph& g, int s, const std::vector<std::vector<int>>* previous) {
    if (s < 0) throw Error("negative subset size");
    if (s == 0) return {{}};
    std::vector<std::vector<int>> prev_store;
    if (!previous) {
        prev_store = doubling_orbits(g, s - 1);
        previous = &prev_store;
    }
    std::vector<std::vector<int>> out;
    std::set<std::string> seen;
    for (const auto& rep : *previous) {
        for (int e = 0; e < g.size(); ++e) {
            if (std::find(rep.begin(), rep.end(), e) != rep.end()) continue;
            auto cand = rep;
            cand.push_back(e);
            std::sort(cand.begin(), cand.end());
            if (seen.insert(canonical_form(apply_doubling(g, cand))).second) out.push_back(std::move(cand));
        }
    }
    return out;
}

SolveResult exact_D_lir(const Multigraph& g, const SolveBudget& budget, Parallelism par) {
    check_doubling_input(g);
    auto deadline = deadline_after(budget.seconds);
    SolveResult res;
    std::vector<std::vector<int>> reps;
    for (int s = 0; s <= budget.max_doublings; ++s) {
        reps = s == 0 ? std::vector<std::vector<int>>{{}} : doubling_orbits(g, s, &reps);
        int count = static_cast<int>(reps.size());
        std::vector<TwoLiecResult> out(count);
        std::atomic<int> best{count};
        SolveBudget b = budget;
        bool parallel = par == Parallelism::OpenMP;
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
        for (int i = 0; i < count; ++i) {
            if (i > best.load()) continue;
            SolveBudget mine = b;
            mine.seconds = seconds_left(deadline);
            out[i] = search_2liec(apply_doubling(g, reps[i]), mine);
            if (out[i].status == SolveStatus::Found) {
                int cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
        bool over = false;
        for (int i = 0; i < count; ++i) {
            res.nodes += out[i].nodes;
            if (out[i].status == SolveStatus::BudgetExceeded) over = true;
        }
        int hit = best.load();
        if (hit < count) {
            DoublingPlan plan{g, reps[hit], *out[hit].coloring};
            if (!verify_plan(plan).ok) throw Error("internal: doubling plan failed verification");
            res.status = SolveStatus::Found;
            res.value = s;
            res.plan = std::move(plan);
            return res;
        }
        if (over) {
            res.status = SolveStatus::BudgetExceeded;
            res.value = s;
            return res;
        }
    }
    res.status = SolveStatus::ExhaustedNoSolution;
    return res;
}

namespace {

constexpr char kMagic[8] = {'L', 'I', 'R', 'C', 'K', 'P', 'T', '\n'};
constexpr std::uint32_t kVersion = 1;

struct Record {
    std::uint32_t s, rep, branch;
    auto operator<=>(const Record&) const = default;
};

}  // namespace

// File layout: magic, u32 version, u32 target, u32 length + canonical form of
// the graph, then one (s, representative, branch) u32 triple per finished
// root branch.
CheckpointRun prove_doubling_lower_bound(const Multigraph& g, int target, const std::string& checkpoint_path,
                                         const SolveBudget& budget) {
    check_doubling_input(g);
    std::string canon = canonical_form(g);
    std::set<Record> finished;
    {
        std::ifstream in(checkpoint_path, std::ios::binary);
        if (in) {
            char magic[8];
            std::uint32_t version = 0, tgt = 0, len = 0;
            in.read(magic, 8);
            in.read(reinterpret_cast<char*>(&version), 4);
            in.read(reinterpret_cast<char*>(&tgt), 4);
            in.read(reinterpret_cast<char*>(&len), 4);
            if (!in || std::memcmp(magic, kMagic, 8) != 0 || version != kVersion)
                throw Error("checkpoint file has a bad header");
            std::string stored(len, '\0');
            in.read(stored.data(), len);
            if (!in || stored != canon || static_cast<int>(tgt) != target)
                throw Error("checkpoint file belongs to a different run");
            Record r{};
            while (in.read(reinterpret_cast<char*>(&r), sizeof r)) finished.insert(r);
        }
    }
    std::ofstream out;
    if (finished.empty()) {
        out.open(checkpoint_path, std::ios::binary | std::ios::trunc);
        std::uint32_t tgt = target, len = static_cast<std::uint32_t>(canon.size());
        out.write(kMagic, 8);
        out.write(reinterpret_cast<const char*>(&kVersion), 4);
        out.write(reinterpret_cast<const char*>(&tgt), 4);
        out.write(reinterpret_cast<const char*>(&len), 4);
        out.write(canon.data(), len);
        out.flush();
    } else {
        out.open(checkpoint_path, std::ios::binary | std::ios::app);
    }
    if (!out) throw Error("cannot write checkpoint file " + checkpoint_path);

    CheckpointRun run;
    auto deadline = deadline_after(budget.seconds);
    std::vector<std::vector<int>> reps;
    for (int s = 0; s < target; ++s) {
        reps = s == 0 ? std::vector<std::vector<int>>{{}} : doubling_orbits(g, s, &reps);
        for (int i = 0; i < static_cast<int>(reps.size()); ++i) {
            BranchHooks hooks;
            hooks.skip = [&](int b) {
                ++run.branches_total;
                Record r{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(b)};
                if (finished.count(r)) {
                    ++run.branches_done;
                    return true;
                }
                return false;
            };
            hooks.done = [&](int b) {
                Record r{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(b)};
                out.write(reinterpret_cast<const char*>(&r), sizeof r);
                out.flush();
                ++run.branches_done;
            };
            SolveBudget b = budget;
            b.seconds = seconds_left(deadline);
            auto r = search_2liec(apply_doubling(g, reps[i]), b, &hooks);
            if (r.status != SolveStatus::ExhaustedNoSolution) {
                run.status = r.status;
                return run;
            }
        }
    }
    run.status = SolveStatus::ExhaustedNoSolution;
    return run;
}

int pendant_triangle_bound(const Multigraph& g) {
    if (!in_family_T(g)) throw Error("pendant triangle bound needs a member of the family T");
    auto tri = triangles(g);
    int t = static_cast<int>(tri.size());
    std::vector<int> owner(g.n(), -1);
    for (int i = 0; i < t; ++i)
        for (int v : tri[i]) owner[v] = i;
    auto degs = g.degrees();
    std::vector<std::set<int>> nbr(t);
    int longest = 0;
    for (int i = 0; i < t; ++i)
        for (int x : tri[i]) {
            for (auto [y, b] : g.incident(x)) {
                if (owner[y] == i) continue;
                int prev = x, cur = y, len = 1;
                while (owner[cur] < 0 && degs[cur] == 2) {
                    int nxt = g.incident(cur)[0].first == prev ? g.incident(cur)[1].first : g.incident(cur)[0].first;
                    prev = cur;
                    cur = nxt;
                    ++len;
                }
                if (owner[cur] >= 0) {
                    nbr[i].insert(owner[cur]);
                    longest = std::max(longest, len);
                }
            }
        }
    if (t < 2 || (t == 2 && longest < 3))
        throw Error("pendant triangle bound needs three triangles, or two joined by a path of length >= 3");
    int count = 0;
    for (int i = 0; i < t; ++i) {
        if (nbr[i].size() != 1) continue;
        if (std::all_of(tri[i].begin(), tri[i].end(), [&](int v) { return degs[v] >= 3; })) ++count;
    }
    return count;
}

}  // namespace lir
