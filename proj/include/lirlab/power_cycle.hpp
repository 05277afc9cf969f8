#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lirlab/multigraph.hpp"

namespace lir {

enum class DegreeMode { NoHalfEdges, HalfEdges };

std::string to_string(DegreeMode m);

// The ordered degree list L of the disconnected almost irregular graph H_t,
// cut into sublists: three (no half-edges) or five plus the lone zero
// between L4 and L5 (half-edges).
struct DegreeList {
    int t = 0;
    int k = 0;
    DegreeMode mode = DegreeMode::NoHalfEdges;
    std::vector<int> L;
    std::vector<int> parts;  // sublist lengths in order
    int s1 = 0, s2 = 0, s3 = 0, s4 = 0;
};

// Ordered graph on positions 0..size-1 with at most one stub per vertex.
struct HalfEdgeGraph {
    int t = 0;
    int k = 0;
    int ell = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> stub;

    int size() const { return static_cast<int>(stub.size()); }
    // stubs count toward degrees
    std::vector<int> degrees() const;
};

struct PowerCycleParams {
    int n = 0;
    int k = 0;
    int t = 0;
    int p = 0;
    int q = 0;
    DegreeMode mode = DegreeMode::NoHalfEdges;
};

bool mode_admissible(int t, int k, DegreeMode mode);
DegreeList build_degree_list(int t, int k, DegreeMode mode);
HalfEdgeGraph build_A(int t, int k);
HalfEdgeGraph build_B(int t, int k);
HalfEdgeGraph build_A(int t, int k, DegreeMode mode);
HalfEdgeGraph build_B(int t, int k, DegreeMode mode);

// Names of the violated conditions ("a1".."a6" / "b1".."b5"); empty when all hold.
std::vector<std::string> validate_A(const HalfEdgeGraph& a);
std::vector<std::string> validate_B(const HalfEdgeGraph& b);

PowerCycleParams choose_parameters(int n, int k);

// Blue subgraph G of C_n^k glued from p copies of A and q copies of B.
Multigraph assemble_blue(const PowerCycleParams& params);

// (i) blue edges join vertices at cyclic distance <= k; (ii) equal blue
// degrees sit at cyclic distance >= t+1.
bool assembly_distances_ok(const Multigraph& blue, int k, int t);

int cyclic_distance(int n, int u, int v);

DoublingPlan color_power_of_cycle(int n, int k);

}  // namespace lir
