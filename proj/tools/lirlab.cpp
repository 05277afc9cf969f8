// Command-line front end. Stdout carries data, stderr carries progress.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "lirlab/colorers.hpp"
#include "lirlab/fixtures.hpp"
#include "lirlab/io.hpp"
#include "lirlab/solver.hpp"
#include "sweeps.hpp"

using namespace lir;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kParseError = 2;
constexpr int kBudgetExceeded = 3;

struct Options {
    std::uint64_t budget_nodes = SolveBudget{}.node_limit;
    double budget_seconds = SolveBudget{}.seconds;
    int max_colors = SolveBudget{}.max_colors;
    int max_doublings = SolveBudget{}.max_doublings;
    std::string format = "json";
    std::uint64_t seed = 1;
    std::string fixtures;
    std::string output;

    SolveBudget budget() const {
        SolveBudget b;
        b.node_limit = budget_nodes;
        b.seconds = budget_seconds;
        b.max_colors = max_colors;
        b.max_doublings = max_doublings;
        return b;
    }
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(o.output);
    if (!out) throw Error("cannot write " + o.output);
    out << text << '\n';
}

std::string table(const Multigraph& g, const EdgeColoring* c) {
    std::ostringstream s;
    s << "# n=" << g.n() << " bundles=" << g.size() << "\n";
    for (int i = 0; i < g.size(); ++i) {
        auto b = g.bundle(i);
        s << b.u << ' ' << b.v << ' ' << b.mult;
        if (c) s << ' ' << color_char((*c)[i]);
        s << '\n';
    }
    return s.str();
}

std::string format_plan(const Options& o, const DoublingPlan& p) {
    if (o.format == "dot") return export_dot(p);
    if (o.format == "table") {
        auto g = p.doubled_graph();
        return "# doublings=" + std::to_string(p.doublings()) + "\n" + table(g, &p.coloring);
    }
    return encode(p);
}

Multigraph input_graph(const std::string& family, const std::string& input) {
    if (!family.empty()) return generate(parse_family(family));
    return decode(read_input(input)).graph;
}

nlohmann::json report_json(const Multigraph& g, const VerificationReport& r) {
    nlohmann::json j;
    j["ok"] = r.ok;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : r.violations) {
        auto b = g.bundle(v.bundle);
        j["violations"].push_back({{"bundle", v.bundle},
                                   {"u", b.u},
                                   {"v", b.v},
                                   {"color", std::string(1, color_char(v.color))},
                                   {"deg_u", v.deg_u},
                                   {"deg_v", v.deg_v}});
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"locally irregular edge colorings with doubled edges"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--budget-nodes", o.budget_nodes, "node limit per 2-liec search");
    app.add_option("--budget-seconds", o.budget_seconds, "wall-clock limit for a solver call");
    app.add_option("--max-colors", o.max_colors, "largest color count tried by solve");
    app.add_option("--max-doublings", o.max_doublings, "largest doubling set tried by solve --dlir");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "dot", "table"}));
    app.add_option("--seed", o.seed, "seed for randomized sweeps");
    app.add_option("--fixtures", o.fixtures, "directory of figure fixtures (default: embedded)");
    app.add_option("-o,--output", o.output, "write data here instead of stdout");

    std::string family, input, suite, checkpoint;
    bool dlir = false;
    int target = 2;

    auto* gen = app.add_subcommand("generate", "write a family member as JSON");
    gen->add_option("family", family, "family spec, e.g. cycle:17")->required();

    auto* col = app.add_subcommand("color", "construct a doubling plan for a family member");
    col->add_option("family", family, "family spec")->required();

    auto* sol = app.add_subcommand("solve", "exact lir, or exact doubling number with --dlir");
    sol->add_option("family", family, "family spec (or use --input)");
    sol->add_option("--input", input, "graph JSON file, - for stdin");
    sol->add_flag("--dlir", dlir, "minimum number of doubled edges for a 2-liec");

    auto* ver = app.add_subcommand("verify", "check a colored (multi)graph or plan");
    ver->add_option("file", input, "JSON file, - or omitted for stdin");

    auto* exp = app.add_subcommand("export", "convert a graph or plan to DOT");
    exp->add_option("file", input, "JSON file, - or omitted for stdin");

    auto* swp = app.add_subcommand("sweep", "run a named theorem-scale suite, or all");
    std::string names;
    for (const auto& n : sweep_names()) names += " " + n;
    swp->add_option("suite", suite, "one of:" + names + ", all")->required();

    auto* low = app.add_subcommand("lower-bound", "checkpointed proof that fewer than --target doublings fail");
    low->add_option("family", family, "family spec")->required();
    low->add_option("--target", target, "doubling count to prove necessary")->required();
    low->add_option("--checkpoint", checkpoint, "progress file; reruns resume from it")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kParseError;
    }

    try {
        set_fixture_dir(o.fixtures);
        if (*gen) {
            auto g = generate(parse_family(family));
            if (o.format == "dot") emit(o, export_dot(g));
            else if (o.format == "table") emit(o, table(g, nullptr));
            else emit(o, encode(g));
        } else if (*col) {
            auto p = color_family(parse_family(family), o.budget());
            std::cerr << family_name(parse_family(family)) << ": " << p.doublings() << " doubled edge(s)\n";
            emit(o, format_plan(o, p));
        } else if (*sol) {
            if (family.empty() == input.empty()) throw ParseError("solve needs exactly one of a family spec or --input");
            auto g = input_graph(family, input);
            nlohmann::json j;
            if (dlir) {
                auto r = exact_D_lir(g, o.budget());
                if (r.status == SolveStatus::BudgetExceeded) throw BudgetExceeded("solver budget exhausted");
                j["status"] = to_string(r.status);
                j["dlir"] = r.status == SolveStatus::Found ? nlohmann::json(r.value) : nlohmann::json(nullptr);
                if (r.plan) j["certificate"] = to_json(*r.plan);
                j["nodes"] = r.nodes;
                if (o.format == "table") {
                    emit(o, r.status == SolveStatus::Found ? "dlir " + std::to_string(r.value)
                                                           : "no plan with at most " + std::to_string(o.max_doublings) +
                                                                 " doubled edges");
                    return 0;
                }
            } else {
                auto r = exact_lir(g, o.budget());
                if (r.status == SolveStatus::BudgetExceeded) throw BudgetExceeded("solver budget exhausted");
                j["status"] = to_string(r.status);
                j["lir"] = r.status == SolveStatus::Found ? nlohmann::json(r.value) : nlohmann::json(nullptr);
                if (r.status == SolveStatus::Found) j["certificate"] = r.coloring;
                j["nodes"] = r.nodes;
                if (o.format == "table") {
                    emit(o, r.status == SolveStatus::Found ? "lir " + std::to_string(r.value)
                                                           : "no liec with at most " + std::to_string(o.max_colors) +
                                                                 " colors");
                    return 0;
                }
            }
            emit(o, j.dump());
        } else if (*ver) {
            auto doc = decode(read_input(input));
            if (!doc.coloring) throw ParseError("verify needs a coloring");
            auto g = doc.doubled ? plan_from_document(doc).doubled_graph() : doc.graph;
            auto r = verify_liec(g, *doc.coloring);
            emit(o, report_json(g, r).dump());
            if (!r.ok) {
                for (const auto& v : r.violations) {
                    auto b = g.bundle(v.bundle);
                    std::cerr << "bundle " << v.bundle << " (" << b.u << "-" << b.v << ", " << color_char(v.color)
                              << "): both ends have degree " << v.deg_u << "\n";
                }
                return kVerifyFailed;
            }
        } else if (*exp) {
            auto doc = decode(read_input(input));
            if (doc.doubled) {
                emit(o, export_dot(plan_from_document(doc)));
            } else {
                const EdgeColoring* c = doc.coloring ? &*doc.coloring : nullptr;
                emit(o, export_dot(doc.graph, c));
            }
        } else if (*swp) {
            auto list = suite == "all" ? sweep_names() : std::vector<std::string>{suite};
            bool ok = true;
            std::ostringstream s;
            for (const auto& n : list) {
                std::cerr << "running " << n << "\n";
                auto r = run_sweep(n, o.seed);
                char line[64];
                std::snprintf(line, sizeof line, "%-20s %s %8.2fs  ", r.name.c_str(), r.ok ? "pass" : "FAIL", r.seconds);
                s << line << r.note << "\n";
                ok = ok && r.ok;
            }
            emit(o, s.str());
            if (!ok) return kVerifyFailed;
        } else if (*low) {
            auto g = generate(parse_family(family));
            auto r = prove_doubling_lower_bound(g, target, checkpoint, o.budget());
            nlohmann::json j{{"status", to_string(r.status)},
                             {"branches_total", r.branches_total},
                             {"branches_done", r.branches_done}};
            emit(o, j.dump());
            if (r.status == SolveStatus::BudgetExceeded) return kBudgetExceeded;
            if (r.status == SolveStatus::Found) return kVerifyFailed;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
