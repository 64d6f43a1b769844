#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ghilb {

using Int = std::int64_t;
using Rational = boost::multiprecision::cpp_rational;

/// Integer 3-vector. Two-dimensional data keeps the last slot at zero.
using Vec3 = std::array<Int, 3>;

class InvalidGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The diagonal cyclic action 1/r(w_1, ..., w_n) with n = 2 or 3.
///
/// Weights are stored reduced into [0, r). The group is the single global
/// context of every computation: characters, the lattice N and the weight
/// map are all defined relative to it.
class GroupAction {
 public:
  GroupAction(Int order, std::vector<Int> weights);

  /// The terminal family 1/r(1, a, r - a). Requires gcd(r, a) = 1 and
  /// 0 < a < r - a. The order-one group is accepted as the trivial action.
  static GroupAction terminal(Int r, Int a);

  Int order() const { return order_; }
  int dim() const { return static_cast<int>(weights_.size()); }
  Int weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
  const std::vector<Int>& weights() const { return weights_; }

  /// Every weight coprime to r.
  bool is_isolated() const;
  /// Weights of the form (1, a, r - a) with a < r - a, or the trivial group.
  bool is_terminal() const;
  /// Index of Z^n inside N = Z^n + Z * weights / r.
  Int lattice_index() const;

  bool operator==(const GroupAction&) const = default;

 private:
  Int order_;
  std::vector<Int> weights_;
};

std::string to_string(const GroupAction& g);

/// A character chi_i of the cyclic group; tensor product is addition mod r.
struct Character {
  Int value = 0;
  Int order = 1;

  bool operator==(const Character&) const = default;
};

Character make_character(Int value, Int order);
Character tensor(Character a, Character b);

/// A set of characters of one group, kept sorted ascending.
struct CharacterSet {
  Int order = 1;
  std::set<Int> values;

  bool contains(Int v) const { return values.count(v) > 0; }
  std::size_t size() const { return values.size(); }
  bool operator==(const CharacterSet&) const = default;
};

std::string to_string(const CharacterSet& s);

/// A point of N with coordinates scaled by a common denominator.
struct LatticePoint {
  Vec3 scaled{0, 0, 0};
  Int denominator = 1;

  bool operator==(const LatticePoint&) const = default;
  auto operator<=>(const LatticePoint&) const = default;

  Rational coordinate(int i) const;
};

std::string to_string(const LatticePoint& p);

// Integer helpers.
Int gcd(Int a, Int b);
/// Residue in [0, r).
Int residue(Int k, Int r);
/// Smallest positive integer congruent to k mod r, so multiples of r map to r.
Int reduce_mod(Int k, Int r);
std::optional<Int> mod_inverse(Int a, Int r);

Int dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Int det3(const Vec3& a, const Vec3& b, const Vec3& c);
Vec3 add(const Vec3& a, const Vec3& b);
Vec3 sub(const Vec3& a, const Vec3& b);
Vec3 scale(Int k, const Vec3& a);
bool is_zero(const Vec3& a);
/// Divide out the gcd of the entries; the zero vector is returned unchanged.
Vec3 primitive(const Vec3& a);
/// a and b are positive multiples of each other.
bool same_direction(const Vec3& a, const Vec3& b);

/// True when the scaled point lies in N (denominator must equal r).
bool in_lattice(const GroupAction& g, const LatticePoint& p);

/// The first lattice point of N along the ray through a nonzero integer
/// direction, returned over denominator r.
LatticePoint primitive_in_lattice(const GroupAction& g, const Vec3& direction);

/// The primitive element of the dual lattice M = {m : m . weights = 0 mod r}
/// on the line through a nonzero integer vector, with the same orientation.
Vec3 primitive_in_dual(const GroupAction& g, const Vec3& normal);

/// r * e_i as a lattice point over denominator r.
LatticePoint basis_ray(const GroupAction& g, int i);

/// The lattice points p1, p2, p3 closest to the sides e2e3, e3e1, e1e2 of
/// the junior simplex of 1/r(1, a, r - a).
std::array<LatticePoint, 3> nearest_lattice_points(const GroupAction& g);

}  // namespace ghilb
