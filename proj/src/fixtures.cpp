#include "lirlab/fixtures.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "lirlab/io.hpp"

namespace lir {

const std::map<std::string, std::string>& embedded_fixtures();

namespace {

std::mutex dir_mutex;
std::string fixture_dir;

nlohmann::json read_fixture(const std::string& name) {
    std::string dir;
    {
        std::lock_guard<std::mutex> lock(dir_mutex);
        dir = fixture_dir;
    }
    std::string text;
    if (dir.empty()) {
        const auto& m = embedded_fixtures();
        auto it = m.find(name);
        if (it == m.end()) throw Error("unknown fixture " + name);
        text = it->second;
    } else {
        std::ifstream in(dir + "/" + name + ".json");
        if (!in) throw Error("cannot open fixture " + dir + "/" + name + ".json");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError("fixture " + name + ": " + e.what());
    }
}

std::vector<DegreePair> read_labels(const nlohmann::json& j, const std::string& name) {
    if (!j.contains("degree_labels")) throw ParseError("fixture " + name + " has no degree_labels");
    std::vector<DegreePair> out;
    for (const auto& p : j["degree_labels"]) out.push_back({p.at(1).get<int>(), p.at(0).get<int>()});
    return out;
}

}  // namespace

void set_fixture_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lock(dir_mutex);
    fixture_dir = dir;
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : embedded_fixtures()) out.push_back(k);
    return out;
}

Fixture load_fixture(const std::string& name) {
    auto j = read_fixture(name);
    if (j.contains("copies")) throw Error("fixture " + name + " is copy-level; use load_copy_fixture");
    Fixture f;
    f.name = name;
    auto doc = from_json(j);
    f.plan = plan_from_document(doc);
    f.labels = read_labels(j, name);
    f.extra = doc.extra;
    f.extra.erase("degree_labels");
    auto got = color_degrees(f.plan.doubled_graph(), f.plan.coloring);
    if (got != f.labels) throw Error("fixture " + name + " fails its degree-label checksum");
    if (!verify_plan(f.plan).ok) throw Error("fixture " + name + " is not a 2-liec");
    return f;
}

CopyFixture load_copy_fixture(const std::string& name) {
    auto j = read_fixture(name);
    CopyFixture f;
    f.name = name;
    try {
        f.n = j.at("n").get<int>();
        for (const auto& c : j.at("copies")) {
            auto s = c.at(2).get<std::string>();
            if (s != "R" && s != "B") throw ParseError("copy color must be R or B");
            int u = c.at(0).get<int>(), v = c.at(1).get<int>();
            if (u < 0 || v < 0 || u >= f.n || v >= f.n || u == v) throw ParseError("bad copy endpoints");
            f.copies.emplace_back(u, v, s == "R" ? Color::Red : Color::Blue);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError("fixture " + name + ": " + e.what());
    }
    f.labels = read_labels(j, name);
    if (copy_color_degrees(f) != f.labels) throw Error("fixture " + name + " fails its degree-label checksum");
    return f;
}

ColorDegrees copy_color_degrees(const CopyFixture& f) {
    ColorDegrees d(f.n);
    for (const auto& [u, v, c] : f.copies) {
        if (c == Color::Red) {
            ++d[u].red;
            ++d[v].red;
        } else {
            ++d[u].blue;
            ++d[v].blue;
        }
    }
    return d;
}

bool copy_coloring_ok(const CopyFixture& f) {
    auto d = copy_color_degrees(f);
    for (const auto& [u, v, c] : f.copies) {
        if (c == Color::Red && d[u].red == d[v].red) return false;
        if (c == Color::Blue && d[u].blue == d[v].blue) return false;
    }
    return true;
}

std::string copy_fixture_dot(const CopyFixture& f) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < f.n; ++v) os << "  " << v << ";\n";
    for (const auto& [u, v, c] : f.copies)
        os << "  " << u << " -- " << v << " [color=" << (c == Color::Red ? "red" : "blue") << "];\n";
    os << "}\n";
    return os.str();
}

}  // namespace lir
