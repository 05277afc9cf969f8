#include <algorithm>
#include <map>
#include <set>

#include "lirlab/solver.hpp"

namespace lir {

namespace {

// Individualisation-refinement with twin pruning. No automorphism pruning
// beyond twins, which is plenty for the sizes the solver sees.
class Canon {
public:
    explicit Canon(const Multigraph& g) : n_(g.n()), adj_(static_cast<size_t>(g.n()) * g.n(), 0) {
        for (const auto& b : g.bundles()) {
            adj_[b.u * n_ + b.v] = static_cast<char>(b.mult);
            adj_[b.v * n_ + b.u] = static_cast<char>(b.mult);
        }
    }

    std::string run() {
        std::vector<std::vector<int>> p(1);
        for (int v = 0; v < n_; ++v) p[0].push_back(v);
        if (n_ > 0) search(p);
        return std::to_string(n_) + ":" + best_;
    }

private:
    using Partition = std::vector<std::vector<int>>;

    char at(int u, int v) const { return adj_[u * n_ + v]; }

    Partition refine(Partition p) const {
        std::vector<int> cell(n_);
        while (true) {
            for (int c = 0; c < static_cast<int>(p.size()); ++c)
                for (int v : p[c]) cell[v] = c;
            Partition q;
            for (const auto& c : p) {
                if (c.size() == 1) {
                    q.push_back(c);
                    continue;
                }
                std::map<std::vector<int>, std::vector<int>> by_sig;
                for (int v : c) {
                    std::vector<int> sig;
                    for (int w = 0; w < n_; ++w)
                        if (at(v, w)) sig.push_back(cell[w] * 3 + at(v, w));
                    std::sort(sig.begin(), sig.end());
                    by_sig[sig].push_back(v);
                }
                for (auto& [sig, vs] : by_sig) q.push_back(vs);
            }
            if (q.size() == p.size()) return q;
            p = std::move(q);
        }
    }

    bool twins(int x, int y) const {
        for (int z = 0; z < n_; ++z)
            if (z != x && z != y && at(x, z) != at(y, z)) return false;
        return true;
    }

    void search(const Partition& start) {
        Partition p = refine(start);
        int target = -1;
        for (int c = 0; c < static_cast<int>(p.size()); ++c)
            if (p[c].size() > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            std::string s;
            s.reserve(static_cast<size_t>(n_) * (n_ - 1) / 2);
            for (int i = 0; i < n_; ++i)
                for (int j = i + 1; j < n_; ++j) s.push_back(static_cast<char>('0' + at(p[i][0], p[j][0])));
            if (!have_ || s < best_) {
                best_ = s;
                have_ = true;
            }
            return;
        }
        std::vector<int> tried;
        for (int x : p[target]) {
            bool skip = false;
            for (int y : tried)
                if (twins(x, y)) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            tried.push_back(x);
            Partition q;
            q.reserve(p.size() + 1);
            for (int c = 0; c < static_cast<int>(p.size()); ++c) {
                if (c != target) {
                    q.push_back(p[c]);
                    continue;
                }
                q.push_back({x});
                std::vector<int> rest;
                for (int v : p[c])
                    if (v != x) rest.push_back(v);
                q.push_back(rest);
            }
            search(q);
        }
    }

    int n_;
    std::string adj_;
    std::string best_;
    bool have_ = false;
};

}  // namespace

std::string canonical_form(const Multigraph& g) { return Canon(g).run(); }

std::vector<Multigraph> connected_graphs(int n) {
    if (n < 1) throw Error("connected_graphs needs n >= 1");
    std::vector<Multigraph> level{Multigraph(1, {})};
    for (int m = 2; m <= n; ++m) {
        std::vector<Multigraph> next;
        std::set<std::string> seen;
        for (const auto& g : level) {
            for (int mask = 1; mask < (1 << (m - 1)); ++mask) {
                auto b = g.bundles();
                for (int v = 0; v < m - 1; ++v)
                    if (mask >> v & 1) b.push_back({v, m - 1, 1});
                Multigraph h(m, std::move(b));
                if (seen.insert(canonical_form(h)).second) next.push_back(std::move(h));
            }
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace lir
