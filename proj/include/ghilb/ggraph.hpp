#pragma once

#include <stdexcept>
#include <vector>

#include "ghilb/lattice.hpp"
#include "ghilb/monomial.hpp"

namespace ghilb {

class InvalidGGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a weight vector has two minimisers of one character, i.e.
/// it lies on a wall of the fan.
class TieError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateCone : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotTwoValley : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BoundaryWall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A G-graph: r monomials, one per character, closed under division.
class GGraph {
 public:
  /// Validates every G-graph invariant; throws InvalidGGraph otherwise.
  static GGraph from_members(const GroupAction& g, std::vector<Monomial> members);
  /// The division closure of gens, validated as a G-graph.
  static GGraph from_span(const GroupAction& g, const std::vector<Monomial>& gens);

  const GroupAction& group() const { return group_; }
  /// Members in ascending graded-lex order.
  const std::vector<Monomial>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const Monomial& m) const;
  /// The unique member of the same weight, wt_Gamma(m).
  const Monomial& representative(const Monomial& m) const;
  const Monomial& member_of_character(Int chi) const { return by_character_[static_cast<std::size_t>(chi)]; }

  bool operator==(const GGraph& o) const { return members_ == o.members_; }
  bool operator<(const GGraph& o) const;

 private:
  GGraph(GroupAction g, std::vector<Monomial> by_character);

  GroupAction group_;
  std::vector<Monomial> by_character_;
  std::vector<Monomial> members_;
};

/// Per-character w-minimisers. w must be strictly positive on the first
/// g.dim() coordinates; any positive rescaling gives the same graph.
GGraph ggraph_from_weight(const GroupAction& g, const Vec3& w);
GGraph ggraph_from_weight(const GroupAction& g, const LatticePoint& w);

/// Divisibility-maximal members; equals the canonical spanning set.
std::vector<Monomial> socle(const GGraph& graph);
/// Divisibility-maximal elements of an arbitrary finite monomial set.
std::vector<Monomial> socle_of_set(const std::vector<Monomial>& set);

/// All divisors of the generators, ascending graded-lex.
std::vector<Monomial> span_closure(const GroupAction& g, const std::vector<Monomial>& gens);

struct Valley {
  Int x_exponent = 0;
  Int other_exponent = 0;
  bool operator==(const Valley&) const = default;
};

struct ValleyReport {
  std::vector<Valley> y_valleys;  ///< x^m y^n
  std::vector<Valley> z_valleys;  ///< x^m z^n
  std::size_t count() const { return y_valleys.size() + z_valleys.size(); }
};

ValleyReport valleys(const GGraph& graph);

/// Minimal monomial generators of the ideal of non-members.
std::vector<Monomial> a_gamma(const GGraph& graph);

const Monomial& representative(const GGraph& graph, const Monomial& m);

struct ConeHRep {
  /// Normals n with n . w >= 0 on the closed cone: u - wt_Gamma(u) for u in
  /// A_Gamma, then the coordinate bounds.
  std::vector<Vec3> inequalities;
};

struct ConeVRep {
  /// Primitive lattice points of N over denominator r, ascending.
  std::vector<LatticePoint> rays;
};

struct Cone {
  ConeHRep hrep;
  ConeVRep vrep;
  /// Facets as ascending index lists into vrep.rays (two rays in 3-D, one in 2-D).
  std::vector<std::vector<std::size_t>> facets;

  bool contains(const Vec3& w) const;
  bool contains_in_interior(const Vec3& w) const;
  bool has_ray(const LatticePoint& p) const;
};

/// sigma(Gamma) in both representations.
Cone cone_of(const GGraph& graph);

/// Exponents of a two-valley G-graph
/// Span(x^{ix-1} y^{ky}, x^{kx} y^{jy-1}, x^{ix-1} z^{jz}, x^{jx} z^{kz-1}).
struct TwoValleyData {
  Int i_x = 0, j_x = 0, k_x = 0;
  Int j_y = 0, k_y = 0;
  Int j_z = 0, k_z = 0;

  bool operator==(const TwoValleyData&) const = default;
};

TwoValleyData two_valley_data(const GGraph& graph);

/// The four spanning monomials predicted by the two-valley exponents.
std::vector<Monomial> two_valley_span(const TwoValleyData& d);

struct GigsawResult {
  GGraph graph;
  /// Gamma' \ Gamma, ascending graded-lex.
  std::vector<Monomial> gig;
};

/// Wall-crossing across the facet of cone_of(graph) spanned by facet_rays.
GigsawResult gigsaw(const GGraph& graph, const std::vector<LatticePoint>& facet_rays);
GigsawResult gigsaw(const GGraph& graph, const Cone& cone, std::size_t facet);

/// True when every ray of the facet lies on one coordinate hyperplane.
bool is_boundary_facet(const std::vector<LatticePoint>& facet_rays, int dim);

}  // namespace ghilb
