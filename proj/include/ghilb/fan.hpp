#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghilb/ggraph.hpp"

namespace ghilb {

class SeedInvalid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValencyOutOfRange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownRay : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FanCone {
  GGraph graph;
  Cone cone;
  /// Divisibility-maximal members, i.e. Span(...) generators.
  std::vector<Monomial> span;
};

inline constexpr std::size_t kNoCone = static_cast<std::size_t>(-1);

struct Wall {
  /// cones[1] == kNoCone for a wall on the octant boundary.
  std::array<std::size_t, 2> cones{kNoCone, kNoCone};
  /// Two rays in 3-D, one in 2-D; ascending.
  std::vector<LatticePoint> rays;
  /// Absent on the octant boundary.
  std::optional<MonomialRatio> ratio;

  bool interior() const { return cones[1] != kNoCone; }
  Int character() const { return ratio ? ratio->character : -1; }
};

struct Fan {
  GroupAction group;
  /// Sorted by graded-lex member lists.
  std::vector<FanCone> cones;
  /// Sorted by cone-id pair.
  std::vector<Wall> walls;
  std::vector<LatticePoint> rays;

  std::vector<std::size_t> cones_at_ray(const LatticePoint& ray) const;
  std::vector<std::size_t> walls_at_ray(const LatticePoint& ray) const;
  bool has_ray(const LatticePoint& ray) const;
  std::size_t conifold_count() const;
};

/// Wall-crossing BFS from {1, x, ..., x^{r-1}} (or a generic minimiser set
/// when the first weight is not coprime to r).
Fan build_fan(const GroupAction& g);
/// Same walk from a caller-supplied starting chart.
Fan build_fan(const GroupAction& g, const GGraph& seed);

/// The seed chart used by build_fan(g).
GGraph default_seed(const GroupAction& g);

/// The M-primitive ratio X : X' cut out by the plane through the rays.
MonomialRatio wall_ratio(const GroupAction& g, const std::vector<LatticePoint>& rays);
MonomialRatio wall_ratio(const Fan& fan, std::size_t wall);

/// A ray is interior when every coordinate is strictly positive.
bool is_interior_ray(const LatticePoint& ray, int dim);

enum class VertexCase { kNone, kC1, kC2, kC3, kC4 };
std::string to_string(VertexCase c);

struct VertexInfo {
  LatticePoint ray;
  bool interior = false;
  int valency = 0;
  VertexCase case_tag = VertexCase::kNone;
  std::vector<std::size_t> walls;
  /// Pairs of wall ids that continue each other straight through the ray.
  std::vector<std::pair<std::size_t, std::size_t>> straight_pairs;
};

/// Interior vertices, in ray order. strict throws ValencyOutOfRange outside
/// {3,4,5}; otherwise such vertices keep kNone.
std::vector<VertexInfo> classify_vertices(const Fan& fan, bool strict = true);

struct CheckItem {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct StructuralReport {
  std::vector<CheckItem> items;
  bool ok() const;
};

/// Wall-sharing, cable count at e1, nearest points among the rays, and
/// sampled coverage (samples random interior rays, fixed seed).
StructuralReport structural_checks(const Fan& fan, std::size_t samples = 1000, unsigned long long seed = 20240501ULL);

/// Incident interior walls of e1.
std::size_t cable_count(const Fan& fan);

/// The parallelogram law r1 + r3 = r2 + r4 for some pairing of the rays.
bool is_parallelogram(const std::vector<LatticePoint>& rays);

}  // namespace ghilb
