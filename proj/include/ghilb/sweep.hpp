#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ghilb/lattice.hpp"

namespace ghilb {

/// One terminal group's invariant suite.
struct SweepRow {
  Int r = 0, a = 0;
  std::size_t cones = 0;
  std::size_t conifolds = 0;
  bool valleys_ok = false;     ///< at most two valleys per chart
  bool ray_law_ok = false;     ///< 4 rays exactly for two valleys
  bool valency_ok = false;     ///< interior valencies in {3,4,5}
  bool resolve_ok = false;     ///< x^{i_x} diagonal smooth, no new rays
  /// Conifold cones where exactly one diagonal is smooth; equals
  /// conifolds only if a conifold ever had a singular diagonal.
  std::size_t unique_smooth_diagonals = 0;
  bool theorem_ok = false;
  bool coverage_ok = false;
  bool cables_ok = false;
  std::string detail;

  bool ok() const;
};

SweepRow sweep_group(Int r, Int a, std::size_t samples = 1000);

/// Coprime (r, a) with a < r - a for r in [lo, hi], ascending.
std::vector<std::pair<Int, Int>> terminal_pairs(Int lo, Int hi);

/// Runs sweep_group over the pairs with up to workers threads; rows keep
/// the input order.
std::vector<SweepRow> sweep(const std::vector<std::pair<Int, Int>>& pairs, std::size_t samples, unsigned workers);

}  // namespace ghilb
