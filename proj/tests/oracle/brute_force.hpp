#pragma once

// Independent enumerators for cross-checking the wall-crossing fan. Only
// plain integers are used here; nothing from the library's G-graph or
// cone code.

#include <array>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Exp = std::array<std::int64_t, 3>;
using Graph = std::set<Exp>;

/// Order ideals of N^dim with r elements whose weights hit every residue
/// once and whose cone {w : w.u > w.u' for all minimal non-members u} is
/// open and nonempty.
std::vector<Graph> brute_force_graphs(std::int64_t r, const std::vector<std::int64_t>& weights);

/// Strict homogeneous feasibility of rows . w > 0 by Fourier-Motzkin.
bool strictly_feasible(std::vector<std::vector<std::int64_t>> rows, int vars);

}  // namespace oracle
