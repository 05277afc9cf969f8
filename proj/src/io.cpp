#include "lirlab/io.hpp"

#include <algorithm>
#include <sstream>

namespace lir {

using nlohmann::json;

json to_json(const Multigraph& g) {
    json edges = json::array();
    for (const auto& b : g.bundles()) edges.push_back({b.u, b.v, b.mult});
    return json{{"n", g.n()}, {"edges", edges}};
}

static json coloring_json(const EdgeColoring& c) {
    json a = json::array();
    for (Color x : c) a.push_back(std::string(1, color_char(x)));
    return a;
}

json to_json(const Multigraph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.size()) != g.size()) throw Error("coloring does not cover the bundles");
    auto j = to_json(g);
    j["coloring"] = coloring_json(c);
    return j;
}

json to_json(const DoublingPlan& plan) {
    auto j = to_json(plan.base, plan.coloring);
    j["doubled"] = plan.doubled;
    return j;
}

std::string encode(const Multigraph& g) { return to_json(g).dump(); }
std::string encode(const Multigraph& g, const EdgeColoring& c) { return to_json(g, c).dump(); }
std::string encode(const DoublingPlan& plan) { return to_json(plan).dump(); }

Document from_json(const json& j) {
    try {
        if (!j.is_object()) throw ParseError("document must be an object");
        if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("missing integer \"n\"");
        if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("missing \"edges\" array");
        int n = j["n"].get<int>();
        std::vector<Bundle> in;
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || (e.size() != 2 && e.size() != 3)) throw ParseError("edge must be [u,v] or [u,v,mult]");
            Bundle b{e[0].get<int>(), e[1].get<int>(), e.size() == 3 ? e[2].get<int>() : 1};
            in.push_back(b);
        }
        Document doc;
        doc.graph = Multigraph(n, in);
        // position of each input edge in canonical order
        std::vector<int> where(in.size());
        for (size_t i = 0; i < in.size(); ++i) where[i] = doc.graph.bundle_index(in[i].u, in[i].v);

        if (j.contains("coloring")) {
            const auto& c = j["coloring"];
            if (!c.is_array() || c.size() != in.size()) throw ParseError("coloring length differs from edge count");
            EdgeColoring col(in.size());
            for (size_t i = 0; i < in.size(); ++i) {
                auto s = c[i].get<std::string>();
                if (s == "R" || s == "r")
                    col[where[i]] = Color::Red;
                else if (s == "B" || s == "b")
                    col[where[i]] = Color::Blue;
                else
                    throw ParseError("color must be \"R\" or \"B\"");
            }
            doc.coloring = std::move(col);
        }
        if (j.contains("doubled")) {
            std::vector<int> d;
            for (const auto& x : j["doubled"]) {
                int id = x.get<int>();
                if (id < 0 || id >= static_cast<int>(in.size())) throw ParseError("doubled id out of range");
                d.push_back(where[id]);
            }
            std::sort(d.begin(), d.end());
            if (std::adjacent_find(d.begin(), d.end()) != d.end()) throw ParseError("doubled id repeated");
            doc.doubled = std::move(d);
        }
        for (auto it = j.begin(); it != j.end(); ++it)
            if (it.key() != "n" && it.key() != "edges" && it.key() != "coloring" && it.key() != "doubled")
                doc.extra[it.key()] = it.value();
        return doc;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

Document decode(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
    return from_json(j);
}

DoublingPlan plan_from_document(const Document& doc) {
    if (!doc.coloring) throw ParseError("plan needs a coloring");
    DoublingPlan p;
    p.coloring = *doc.coloring;
    if (doc.doubled) {
        if (!doc.graph.is_simple()) throw ParseError("base graph with \"doubled\" must be simple");
        p.base = doc.graph;
        p.doubled = *doc.doubled;
        return p;
    }
    auto b = doc.graph.bundles();
    for (int i = 0; i < static_cast<int>(b.size()); ++i)
        if (b[i].mult == 2) {
            p.doubled.push_back(i);
            b[i].mult = 1;
        }
    p.base = Multigraph(doc.graph.n(), b);
    return p;
}

DoublingPlan decode_plan(const std::string& text) { return plan_from_document(decode(text)); }

std::string export_dot(const Multigraph& g, const EdgeColoring* c) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
    for (int i = 0; i < g.size(); ++i) {
        const auto& b = g.bundle(i);
        for (int k = 0; k < b.mult; ++k) {
            os << "  " << b.u << " -- " << b.v;
            if (c) os << " [color=" << ((*c)[i] == Color::Red ? "red" : "blue") << "]";
            os << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace lir
