#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "lirlab/multigraph.hpp"

namespace lir {

// {"n": int, "edges": [[u,v,mult],...], "coloring": ["R"/"B",...], "doubled": [ids]}
// When "doubled" is present, "edges" describe the simple base graph and the
// ids index into it. Output edges are always in canonical (min,max) order.
struct Document {
    Multigraph graph;
    std::optional<EdgeColoring> coloring;
    std::optional<std::vector<int>> doubled;
    nlohmann::json extra;  // any other top-level keys, untouched
};

nlohmann::json to_json(const Multigraph& g);
nlohmann::json to_json(const Multigraph& g, const EdgeColoring& c);
nlohmann::json to_json(const DoublingPlan& plan);

std::string encode(const Multigraph& g);
std::string encode(const Multigraph& g, const EdgeColoring& c);
std::string encode(const DoublingPlan& plan);

Document from_json(const nlohmann::json& j);
Document decode(const std::string& text);

// Accepts either form: a base graph with "doubled", or a multigraph whose
// mult-2 bundles are read as the doubled set.
DoublingPlan plan_from_document(const Document& doc);
DoublingPlan decode_plan(const std::string& text);

std::string export_dot(const Multigraph& g, const EdgeColoring* c = nullptr);
inline std::string export_dot(const DoublingPlan& p) {
    auto g = p.doubled_graph();
    return export_dot(g, &p.coloring);
}

}  // namespace lir
