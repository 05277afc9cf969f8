#pragma once

#include <array>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lirlab/multigraph.hpp"

namespace lir {

// One step of a 𝔗* build: attach a path of `length` edges at the
// degree-2 cycle vertex `attach`; if `cycle` >= 3 the far end of the path
// becomes a vertex of a new cycle of that length.
struct TauStarStep {
    int attach = 0;
    int length = 1;
    int cycle = 0;
};

struct TauStarScript {
    int base = 3;
    std::vector<TauStarStep> steps;
};

// Vertex numbering: base cycle 0..base-1 in cyclic order; each step then
// appends its path vertices (nearest first), then the remaining vertices of
// its new cycle in cyclic order starting next to the path end.
struct TauStarLayout {
    Multigraph graph;
    std::vector<std::vector<int>> cycles;        // vertex sequences in cyclic order
    std::vector<std::vector<int>> step_vertices; // new vertices per step
};

struct SplitProfile {
    int n = 0;               // clique order
    std::vector<int> d;      // pendant counts, non-increasing
    bool shared = false;     // d1 = d2 = 1 with one common outside neighbor
};

namespace spec {
struct Path { int n; };
struct Cycle { int n; };
struct Complete { int n; };
struct CompleteMultipartite { std::vector<int> sizes; };
struct PowerOfCycle { int n; int k; };
struct Split { SplitProfile profile; };
struct Bowtie {};
struct AlmostIrregular { int t; bool connected; };
struct TauStar { TauStarScript script; };
struct TriangleChain { int m; };
struct EighthGadget { int m; };
}  // namespace spec

using FamilySpec = std::variant<spec::Path, spec::Cycle, spec::Complete, spec::CompleteMultipartite,
                                spec::PowerOfCycle, spec::Split, spec::Bowtie, spec::AlmostIrregular,
                                spec::TauStar, spec::TriangleChain, spec::EighthGadget>;

// Grammar: path:n | cycle:n | complete:n | kpartite:a,b,... | powcycle:n,k |
// split:n;d1,d2,...[;shared] | bowtie | almostirr:t[,c] | taustar:@file |
// taustar:base/attach,len[,cyc]/... | trianglechain:m | eighth:m
FamilySpec parse_family(const std::string& text);
std::string family_name(const FamilySpec& s);

Multigraph generate(const FamilySpec& s, bool allow_complete_power = false);

Multigraph path_graph(int n);
Multigraph cycle_graph(int n);
Multigraph complete_graph(int n);
Multigraph complete_multipartite(const std::vector<int>& sizes);
Multigraph power_of_cycle(int n, int k, bool allow_complete = false);
Multigraph split_graph(const SplitProfile& p);
Multigraph bowtie();
Multigraph almost_irregular(int t, bool connected);
std::vector<int> almost_irregular_degrees(int t, bool connected);

TauStarLayout build_taustar(const TauStarScript& s);
TauStarScript taustar_from_json(const nlohmann::json& j);
nlohmann::json taustar_to_json(const TauStarScript& s);
TauStarScript random_taustar(std::mt19937_64& rng, int max_cycles, int max_cycle_len = 7, int max_path_len = 4,
                             int max_steps = 8);

TauStarScript triangle_chain_script(int m);
Multigraph triangle_chain(int m);

struct Gadget {
    Multigraph graph;
    DoublingPlan plan;
};
Gadget eighth_gadget(int m);

// Uniform random labelled tree via a Prüfer sequence.
Multigraph random_tree(int n, std::mt19937_64& rng);

bool is_odd_path(const Multigraph& g);
bool is_odd_cycle(const Multigraph& g);
bool in_family_T(const Multigraph& g);
bool is_uncolorable(const Multigraph& g);

// Vertex sets of all 3-cycles (sorted triples).
std::vector<std::array<int, 3>> triangles(const Multigraph& g);

}  // namespace lir
