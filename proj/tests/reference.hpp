#pragma once

#include <optional>
#include <vector>

#include "lirlab/multigraph.hpp"

// Brute-force oracles that share no code with the library beyond the graph
// container: no pruning, no symmetry reduction, plain enumeration.
namespace ref {

// Every bundle of color c joins vertices of different c-degree.
bool naive_is_liec(const lir::Multigraph& g, const std::vector<int>& color);

// Smallest c <= max_colors with a c-liec, or -1.
int naive_lir(const lir::Multigraph& g, int max_colors);

bool naive_has_2liec(const lir::Multigraph& g);

// Smallest number of doubled edges (up to max_doublings) giving a 2-liec, or -1.
int naive_D_lir(const lir::Multigraph& g, int max_doublings);

}  // namespace ref
