#include "lirlab/families.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace lir {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw Error(msg);
}

std::vector<int> parse_ints(const std::string& s, char sep = ',') {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) {
        if (tok.empty()) throw ParseError("empty number in \"" + s + "\"");
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("not a number: \"" + tok + "\"");
        }
        if (used != tok.size()) throw ParseError("not a number: \"" + tok + "\"");
        out.push_back(v);
    }
    return out;
}

int one_int(const std::string& s) {
    auto v = parse_ints(s);
    if (v.size() != 1) throw ParseError("expected one integer, got \"" + s + "\"");
    return v[0];
}

}  // namespace

// ---------------------------------------------------------------- basic families

Multigraph path_graph(int n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return simple_graph(n, e);
}

Multigraph cycle_graph(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return simple_graph(n, e);
}

Multigraph complete_graph(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return simple_graph(n, e);
}

Multigraph complete_multipartite(const std::vector<int>& sizes) {
    require(!sizes.empty(), "multipartite graph needs a part");
    std::vector<int> part;
    for (int p = 0; p < static_cast<int>(sizes.size()); ++p) {
        require(sizes[p] >= 1, "part sizes must be positive");
        part.insert(part.end(), sizes[p], p);
    }
    int n = static_cast<int>(part.size());
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part[i] != part[j]) e.emplace_back(i, j);
    return simple_graph(n, e);
}

Multigraph power_of_cycle(int n, int k, bool allow_complete) {
    require(k >= 1, "power needs k >= 1");
    require(n >= 3, "power of cycle needs n >= 3");
    require(allow_complete || n >= 2 * k + 2, "power of cycle needs n >= 2k+2");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::min(j - i, n - (j - i)) <= k) e.emplace_back(i, j);
    return simple_graph(n, e);
}

Multigraph split_graph(const SplitProfile& p) {
    require(p.n >= 1, "split graph needs a clique");
    require(static_cast<int>(p.d.size()) == p.n, "split profile needs one pendant count per clique vertex");
    for (int i = 0; i < p.n; ++i) {
        require(p.d[i] >= 0, "pendant counts must be nonnegative");
        require(i == 0 || p.d[i] <= p.d[i - 1], "pendant counts must be non-increasing");
    }
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j) e.emplace_back(i, j);
    int next = p.n;
    int start = 0;
    if (p.shared) {
        require(p.n >= 3 && p.d[0] == 1 && p.d[1] == 1, "shared neighbor needs n >= 3 and d1 = d2 = 1");
        e.emplace_back(0, next);
        e.emplace_back(1, next);
        ++next;
        start = 2;
    }
    for (int i = start; i < p.n; ++i)
        for (int r = 0; r < p.d[i]; ++r) e.emplace_back(i, next++);
    return simple_graph(next, e);
}

Multigraph bowtie() {
    return simple_graph(10, {{2, 0}, {0, 1}, {0, 5}, {5, 4}, {4, 0}, {1, 9}, {9, 6},
                             {0, 3}, {3, 2}, {7, 8}, {8, 1}, {7, 1}, {1, 6}});
}

std::vector<int> almost_irregular_degrees(int t, bool connected) {
    require(t >= 2, "almost irregular graph needs t >= 2");
    std::vector<int> d;
    if (connected) {
        for (int x = 1; x <= t - 1; ++x) d.push_back(x);
        d.push_back(t / 2);
    } else {
        for (int x = 0; x <= t - 2; ++x) d.push_back(x);
        d.push_back((t - 1) / 2);
    }
    std::sort(d.begin(), d.end());
    return d;
}

Multigraph almost_irregular(int t, bool connected) {
    auto d = almost_irregular_degrees(t, connected);
    int threshold = connected ? t : t - 1;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            if (d[i] + d[j] >= threshold) e.emplace_back(i, j);
    auto g = simple_graph(t, e);
    require(g.degrees() == d, "almost irregular construction missed its degree list");
    return g;
}

// ---------------------------------------------------------------- 𝔗*

TauStarLayout build_taustar(const TauStarScript& s) {
    require(s.base >= 3, "base cycle needs length >= 3");
    TauStarLayout out;
    std::vector<std::pair<int, int>> e;
    std::vector<int> deg(s.base, 2);
    std::vector<bool> on_cycle(s.base, true);
    std::vector<int> base;
    for (int i = 0; i < s.base; ++i) {
        e.emplace_back(i, (i + 1) % s.base);
        base.push_back(i);
    }
    out.cycles.push_back(base);
    int next = s.base;
    auto add_vertex = [&](bool cyc) {
        deg.push_back(0);
        on_cycle.push_back(cyc);
        return next++;
    };
    for (const auto& st : s.steps) {
        require(st.attach >= 0 && st.attach < next, "step attaches to an unknown vertex");
        require(on_cycle[st.attach] && deg[st.attach] == 2, "step must attach at a degree-2 cycle vertex");
        require(st.length >= 1, "path length must be at least 1");
        require(st.cycle == 0 || st.cycle >= 3, "new cycle needs length >= 3");
        std::vector<int> fresh;
        int prev = st.attach;
        for (int i = 0; i < st.length; ++i) {
            int v = add_vertex(false);
            fresh.push_back(v);
            e.emplace_back(prev, v);
            ++deg[prev];
            ++deg[v];
            prev = v;
        }
        if (st.cycle) {
            std::vector<int> cyc{prev};
            on_cycle[prev] = true;
            for (int i = 1; i < st.cycle; ++i) {
                int v = add_vertex(true);
                fresh.push_back(v);
                cyc.push_back(v);
            }
            for (int i = 0; i < st.cycle; ++i) {
                int a = cyc[i], b = cyc[(i + 1) % st.cycle];
                e.emplace_back(a, b);
                ++deg[a];
                ++deg[b];
            }
            out.cycles.push_back(cyc);
        }
        out.step_vertices.push_back(fresh);
    }
    out.graph = simple_graph(next, e);
    return out;
}

TauStarScript taustar_from_json(const nlohmann::json& j) {
    try {
        TauStarScript s;
        s.base = j.at("base").get<int>();
        for (const auto& st : j.at("steps")) {
            if (!st.is_array() || st.size() < 2 || st.size() > 3) throw ParseError("step must be [attach,len] or [attach,len,cycle]");
            s.steps.push_back({st[0].get<int>(), st[1].get<int>(), st.size() == 3 ? st[2].get<int>() : 0});
        }
        return s;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad taustar script: ") + e.what());
    }
}

nlohmann::json taustar_to_json(const TauStarScript& s) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& st : s.steps) steps.push_back({st.attach, st.length, st.cycle});
    return {{"base", s.base}, {"steps", steps}};
}

TauStarScript random_taustar(std::mt19937_64& rng, int max_cycles, int max_cycle_len, int max_path_len,
                             int max_steps) {
    auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    TauStarScript s;
    s.base = uni(3, max_cycle_len);
    std::vector<int> free;  // degree-2 cycle vertices
    for (int i = 0; i < s.base; ++i) free.push_back(i);
    int next = s.base;
    int cycles = 1;
    int steps = uni(1, max_steps);
    for (int i = 0; i < steps && !free.empty(); ++i) {
        int pick = uni(0, static_cast<int>(free.size()) - 1);
        int at = free[pick];
        free.erase(free.begin() + pick);
        TauStarStep st{at, uni(1, max_path_len), 0};
        if (cycles < max_cycles && uni(0, 1) == 1) {
            st.cycle = uni(3, max_cycle_len);
            ++cycles;
        }
        next += st.length;
        if (st.cycle) {
            for (int v = 1; v < st.cycle; ++v) free.push_back(next + v - 1);
            next += st.cycle - 1;
        }
        s.steps.push_back(st);
    }
    return s;
}

TauStarScript triangle_chain_script(int m) {
    require(m >= 2, "triangle chain needs m >= 2");
    TauStarScript s;
    s.base = 3;
    int next = 3;
    // links between triangles are odd paths of length 3 so that the
    // neighbourhoods used in the pendant-triangle bound stay edge-disjoint
    auto add_triangle_at = [&](int v) {
        s.steps.push_back({v, 3, 3});
        std::array<int, 3> t{next + 2, next + 3, next + 4};
        next += 5;
        return t;
    };
    auto add_tail = [&](int v) {
        s.steps.push_back({v, 2, 0});
        next += 2;
    };
    auto pendant_triangle = [&](int v) {
        auto t = add_triangle_at(v);
        add_tail(t[1]);
        add_tail(t[2]);
    };
    if (m == 2) {
        add_tail(1);
        add_tail(2);
        pendant_triangle(0);
        return s;
    }
    int spine = m - 2;
    std::vector<std::array<int, 3>> tri{{0, 1, 2}};
    for (int i = 1; i < spine; ++i) tri.push_back(add_triangle_at(i == 1 ? tri[0][0] : tri[i - 1][1]));
    std::vector<int> free;
    if (spine == 1) {
        free = {0, 1, 2};
    } else {
        free = {tri[0][1], tri[0][2]};
        for (int i = 1; i < spine - 1; ++i) free.push_back(tri[i][2]);
        free.push_back(tri[spine - 1][1]);
        free.push_back(tri[spine - 1][2]);
    }
    for (int v : free) pendant_triangle(v);
    return s;
}

Multigraph triangle_chain(int m) { return build_taustar(triangle_chain_script(m)).graph; }

Gadget eighth_gadget(int m) {
    require(m >= 2, "gadget needs m >= 2");
    std::vector<std::pair<int, int>> e;
    for (int j = 0; j < m; ++j) {
        int b = 1 + 7 * j;
        int x0 = b, y0 = b + 1, z0 = b + 2, y1 = b + 3, y2 = b + 4, z1 = b + 5, z2 = b + 6;
        e.insert(e.end(), {{0, x0}, {x0, y0}, {x0, z0}, {y0, z0}, {y0, y1}, {y1, y2}, {z0, z1}, {z1, z2}});
    }
    Gadget out;
    out.graph = simple_graph(1 + 7 * m, e);
    ColoringBuilder cb(out.graph);
    out.plan.base = out.graph;
    for (int j = 0; j < m; ++j) {
        int b = 1 + 7 * j;
        int x0 = b, y0 = b + 1, z0 = b + 2, y1 = b + 3, y2 = b + 4, z1 = b + 5, z2 = b + 6;
        // with two copies the shared vertex would tie with x0 in red, so
        // the second copy is drawn in swapped colors
        Color c = (m == 2 && j == 1) ? Color::Blue : Color::Red;
        cb.set(0, x0, c);
        cb.set(x0, y0, c);
        cb.set(x0, z0, c);
        cb.set(y0, z0, c);
        cb.set(z0, z1, c);
        cb.set(z1, z2, c);
        cb.set(y0, y1, other(c));
        cb.set(y1, y2, other(c));
        out.plan.doubled.push_back(out.graph.bundle_index(0, x0));
    }
    std::sort(out.plan.doubled.begin(), out.plan.doubled.end());
    out.plan.coloring = cb.take();
    return out;
}

Multigraph random_tree(int n, std::mt19937_64& rng) {
    require(n >= 2, "tree needs n >= 2");
    if (n == 2) return path_graph(2);
    std::vector<int> code(n - 2);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (auto& x : code) x = pick(rng);
    std::vector<int> deg(n, 1);
    for (int x : code) ++deg[x];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    std::vector<std::pair<int, int>> e;
    for (int x : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        e.emplace_back(leaf, x);
        if (--deg[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    e.emplace_back(a, b);
    return simple_graph(n, e);
}

// ---------------------------------------------------------------- recognition

bool is_odd_path(const Multigraph& g) {
    if (!g.is_simple() || !g.connected() || g.size() != g.n() - 1) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 2) return false;
    return g.size() % 2 == 1;
}

bool is_odd_cycle(const Multigraph& g) {
    if (!g.is_simple() || !g.connected() || g.n() < 3 || g.size() != g.n()) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != 2) return false;
    return g.n() % 2 == 1;
}

std::vector<std::array<int, 3>> triangles(const Multigraph& g) {
    std::vector<std::array<int, 3>> out;
    for (const auto& b : g.bundles())
        for (auto [w, i] : g.incident(b.v))
            if (w > b.v && g.adjacent(b.u, w)) out.push_back({b.u, b.v, w});
    return out;
}

bool in_family_T(const Multigraph& g) {
    if (!g.is_simple() || !g.connected()) return false;
    int n = g.n();
    std::vector<std::set<int>> adj(n);
    for (const auto& b : g.bundles()) {
        adj[b.u].insert(b.v);
        adj[b.v].insert(b.u);
    }
    std::vector<bool> alive(n, true);
    int alive_count = n;
    auto deg = [&](int v) { return static_cast<int>(adj[v].size()); };
    auto on_triangle = [&](int v) {
        for (int a : adj[v])
            for (int b : adj[v])
                if (a < b && adj[a].count(b)) return true;
        return false;
    };
    auto remove = [&](int v) {
        for (int w : adj[v]) adj[w].erase(v);
        adj[v].clear();
        alive[v] = false;
        --alive_count;
    };
    while (true) {
        if (alive_count == 3) {
            int edges = 0;
            for (int v = 0; v < n; ++v)
                if (alive[v]) edges += deg(v);
            return edges == 6;
        }
        bool progress = false;
        for (int x = 0; x < n && !progress; ++x) {
            if (!alive[x] || deg(x) != 1) continue;
            std::vector<int> body{x};
            int prev = x, cur = *adj[x].begin();
            while (deg(cur) == 2) {
                body.push_back(cur);
                int nxt = *adj[cur].begin() == prev ? *adj[cur].rbegin() : *adj[cur].begin();
                prev = cur;
                cur = nxt;
            }
            if (deg(cur) == 1) return false;  // the graph is a path
            if (body.size() % 2 == 0 && deg(cur) == 3 && on_triangle(cur)) {
                for (int v : body) remove(v);
                progress = true;
            }
        }
        if (progress) continue;
        for (int x = 0; x < n && !progress; ++x) {
            if (!alive[x] || deg(x) != 3) continue;
            // x must sit on a triangle whose other two vertices have degree 2
            int y = -1, z = -1, out = -1;
            for (int a : adj[x])
                for (int b : adj[x])
                    if (a < b && adj[a].count(b) && deg(a) == 2 && deg(b) == 2) y = a, z = b;
            if (y < 0) continue;
            for (int a : adj[x])
                if (a != y && a != z) out = a;
            std::vector<int> body{x, y, z};
            int prev = x, cur = out, len = 1;
            while (deg(cur) == 2) {
                body.push_back(cur);
                int nxt = *adj[cur].begin() == prev ? *adj[cur].rbegin() : *adj[cur].begin();
                prev = cur;
                cur = nxt;
                ++len;
            }
            if (len % 2 == 1 && deg(cur) == 3 && on_triangle(cur)) {
                for (int v : body) remove(v);
                progress = true;
            }
        }
        if (!progress) return false;
    }
}

bool is_uncolorable(const Multigraph& g) {
    if (!g.connected()) throw Error("is_uncolorable needs a connected graph");
    return is_odd_path(g) || is_odd_cycle(g) || in_family_T(g);
}

// ---------------------------------------------------------------- specs

FamilySpec parse_family(const std::string& text) {
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto need_arg = [&] {
        if (arg.empty()) throw ParseError("family \"" + head + "\" needs parameters");
    };
    if (head == "bowtie") return spec::Bowtie{};
    need_arg();
    if (head == "path") return spec::Path{one_int(arg)};
    if (head == "cycle") return spec::Cycle{one_int(arg)};
    if (head == "complete") return spec::Complete{one_int(arg)};
    if (head == "kpartite") return spec::CompleteMultipartite{parse_ints(arg)};
    if (head == "powcycle") {
        auto v = parse_ints(arg);
        if (v.size() != 2) throw ParseError("powcycle needs n,k");
        return spec::PowerOfCycle{v[0], v[1]};
    }
    if (head == "split") {
        std::vector<std::string> parts;
        std::stringstream ss(arg);
        std::string tok;
        while (std::getline(ss, tok, ';')) parts.push_back(tok);
        if (parts.size() < 2 || parts.size() > 3) throw ParseError("split needs n;d1,d2,...");
        SplitProfile p;
        p.n = one_int(parts[0]);
        p.d = parse_ints(parts[1]);
        if (static_cast<int>(p.d.size()) > p.n) throw ParseError("more pendant counts than clique vertices");
        p.d.resize(p.n, 0);
        if (parts.size() == 3) {
            if (parts[2] != "shared") throw ParseError("unknown split flag \"" + parts[2] + "\"");
            p.shared = true;
        }
        return spec::Split{p};
    }
    if (head == "almostirr") {
        auto v = parse_ints(arg);
        if (v.empty() || v.size() > 2) throw ParseError("almostirr needs t[,connected]");
        return spec::AlmostIrregular{v[0], v.size() == 2 && v[1] != 0};
    }
    if (head == "taustar") {
        if (arg[0] == '@') {
            std::ifstream in(arg.substr(1));
            if (!in) throw ParseError("cannot read " + arg.substr(1));
            nlohmann::json j;
            try {
                in >> j;
            } catch (const std::exception& e) {
                throw ParseError(e.what());
            }
            return spec::TauStar{taustar_from_json(j)};
        }
        std::vector<std::string> parts;
        std::stringstream ss(arg);
        std::string tok;
        while (std::getline(ss, tok, '/')) parts.push_back(tok);
        TauStarScript s;
        s.base = one_int(parts[0]);
        for (size_t i = 1; i < parts.size(); ++i) {
            auto v = parse_ints(parts[i]);
            if (v.size() < 2 || v.size() > 3) throw ParseError("taustar step needs attach,len[,cycle]");
            s.steps.push_back({v[0], v[1], v.size() == 3 ? v[2] : 0});
        }
        return spec::TauStar{s};
    }
    if (head == "trianglechain") return spec::TriangleChain{one_int(arg)};
    if (head == "eighth") return spec::EighthGadget{one_int(arg)};
    throw ParseError("unknown family \"" + head + "\"");
}

namespace {
std::string join(const std::vector<int>& v, char sep = ',') {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return s;
}
template <class... F>
struct overload : F... {
    using F::operator()...;
};
template <class... F>
overload(F...) -> overload<F...>;
}  // namespace

std::string family_name(const FamilySpec& s) {
    return std::visit(
        overload{
            [](const spec::Path& x) { return "path:" + std::to_string(x.n); },
            [](const spec::Cycle& x) { return "cycle:" + std::to_string(x.n); },
            [](const spec::Complete& x) { return "complete:" + std::to_string(x.n); },
            [](const spec::CompleteMultipartite& x) { return "kpartite:" + join(x.sizes); },
            [](const spec::PowerOfCycle& x) { return "powcycle:" + std::to_string(x.n) + "," + std::to_string(x.k); },
            [](const spec::Split& x) {
                return "split:" + std::to_string(x.profile.n) + ";" + join(x.profile.d) +
                       (x.profile.shared ? ";shared" : "");
            },
            [](const spec::Bowtie&) { return std::string("bowtie"); },
            [](const spec::AlmostIrregular& x) {
                return "almostirr:" + std::to_string(x.t) + "," + (x.connected ? "1" : "0");
            },
            [](const spec::TauStar& x) {
                std::string s = "taustar:" + std::to_string(x.script.base);
                for (const auto& st : x.script.steps)
                    s += "/" + join(st.cycle ? std::vector<int>{st.attach, st.length, st.cycle}
                                             : std::vector<int>{st.attach, st.length});
                return s;
            },
            [](const spec::TriangleChain& x) { return "trianglechain:" + std::to_string(x.m); },
            [](const spec::EighthGadget& x) { return "eighth:" + std::to_string(x.m); },
        },
        s);
}

Multigraph generate(const FamilySpec& s, bool allow_complete_power) {
    return std::visit(
        overload{
            [](const spec::Path& x) { return path_graph(x.n); },
            [](const spec::Cycle& x) { return cycle_graph(x.n); },
            [](const spec::Complete& x) { return complete_graph(x.n); },
            [](const spec::CompleteMultipartite& x) { return complete_multipartite(x.sizes); },
            [&](const spec::PowerOfCycle& x) { return power_of_cycle(x.n, x.k, allow_complete_power); },
            [](const spec::Split& x) { return split_graph(x.profile); },
            [](const spec::Bowtie&) { return bowtie(); },
            [](const spec::AlmostIrregular& x) { return almost_irregular(x.t, x.connected); },
            [](const spec::TauStar& x) { return build_taustar(x.script).graph; },
            [](const spec::TriangleChain& x) { return triangle_chain(x.m); },
            [](const spec::EighthGadget& x) { return eighth_gadget(x.m).graph; },
        },
        s);
}

}  // namespace lir
