#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "ghilb/fan.hpp"

namespace ghilb {

class NoSmoothDiagonal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// |det| of the r-scaled rays equals r^dim / [N : Z^dim].
bool is_smooth_cone(const GroupAction& g, const std::vector<LatticePoint>& rays);

/// The two diagonals of a parallelogram cone, each as an ascending ray pair.
std::array<std::array<LatticePoint, 2>, 2> diagonals(const std::vector<LatticePoint>& rays);

struct Diagonal {
  std::size_t cone = 0;
  std::array<LatticePoint, 2> rays;
  /// The sub-cones: each diagonal ray pair plus one of the other two rays.
  std::array<std::vector<LatticePoint>, 2> pieces;
  MonomialRatio ratio;
  /// How many of the two diagonals give two smooth sub-cones.
  int smooth_diagonals = 0;
};

struct ResolvedFan {
  Fan fan;
  std::vector<Diagonal> diagonals;
  /// 3-ray cones of the subdivision, ascending by rays.
  std::vector<std::vector<LatticePoint>> cones;
  std::vector<LatticePoint> rays;
};

/// The diagonal of a conifold cone that cuts the exceptional curve
/// x^{i_x} : y^* z^*, i.e. whose ratio is a pure x-power against a y-z monomial.
Diagonal choose_diagonal(const GroupAction& g, const Cone& cone);

ResolvedFan resolve(const Fan& fan);

struct CurveCharacter {
  Int character = 0;
  MonomialRatio ratio;
};

/// wt(x^{i_x}) for a two-valley graph, with the ratio of the chosen diagonal.
CurveCharacter exceptional_curve_character(const GGraph& graph);

}  // namespace ghilb
