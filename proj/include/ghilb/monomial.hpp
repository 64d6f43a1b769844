#pragma once

#include <string>
#include <utility>

#include "ghilb/lattice.hpp"

namespace ghilb {

/// x^a y^b z^c. Monomials of C[x, y] keep c = 0.
struct Monomial {
  Vec3 exponents{0, 0, 0};

  Int degree() const { return exponents[0] + exponents[1] + exponents[2]; }
  Int operator[](int i) const { return exponents[static_cast<std::size_t>(i)]; }

  bool operator==(const Monomial&) const = default;
};

inline Monomial monomial(Int x, Int y, Int z = 0) { return Monomial{{x, y, z}}; }
inline Monomial variable(int i) {
  Monomial m;
  m.exponents[static_cast<std::size_t>(i)] = 1;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b);

/// Graded lexicographic order with x > y > z.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

Character wt(const GroupAction& g, const Monomial& m);
bool divides(const Monomial& d, const Monomial& m);

/// The exact inner product w . u.
Rational pairing(const LatticePoint& w, const Monomial& m);
/// The same inner product on an integer representative of w.
Int pairing(const Vec3& w, const Monomial& m);

/// "x^7 z", "x y^2", "1".
std::string to_string(const Monomial& m);
/// Parses the rendering produced by to_string (spaces optional).
Monomial parse_monomial(const std::string& text);

/// A pair X : X' of monomials with equal weight, cutting out a wall.
struct MonomialRatio {
  Monomial first;
  Monomial second;
  Int character = 0;

  bool operator==(const MonomialRatio&) const = default;
};

/// Splits a primitive element of M into its positive and negative parts.
/// The side with the larger x-exponent comes first, then the larger
/// y-exponent.
MonomialRatio ratio_from_normal(const GroupAction& g, const Vec3& dual_vector);

std::string to_string(const MonomialRatio& q);

}  // namespace ghilb
