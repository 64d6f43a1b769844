#include "ghilb/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace ghilb {

GroupAction::GroupAction(Int order, std::vector<Int> weights)
    : order_(order), weights_(std::move(weights)) {
  if (order_ < 1) throw InvalidGroup("group order must be positive");
  if (weights_.size() != 2 && weights_.size() != 3)
    throw InvalidGroup("only actions on C^2 and C^3 are supported");
  for (auto& w : weights_) w = residue(w, order_);
}

GroupAction GroupAction::terminal(Int r, Int a) {
  if (r == 1) return GroupAction(1, {0, 0, 0});
  if (r < 1 || a <= 0 || a >= r) throw InvalidGroup("terminal type needs 0 < a < r");
  if (gcd(r, a) != 1) throw InvalidGroup("terminal type needs gcd(r, a) = 1");
  if (!(a < r - a)) throw InvalidGroup("terminal type needs a < r - a");
  return GroupAction(r, {1, a, r - a});
}

bool GroupAction::is_isolated() const {
  for (Int w : weights_)
    if (gcd(w, order_) != 1) return false;
  return true;
}

bool GroupAction::is_terminal() const {
  if (order_ == 1) return true;
  if (dim() != 3 || weights_[0] != 1) return false;
  const Int a = weights_[1];
  return a > 0 && weights_[2] == order_ - a && a < order_ - a && gcd(order_, a) == 1;
}

Int GroupAction::lattice_index() const {
  Int g = order_;
  for (Int w : weights_) g = gcd(g, w);
  return order_ / g;
}

std::string to_string(const GroupAction& g) {
  std::ostringstream os;
  os << "1/" << g.order() << "(";
  for (int i = 0; i < g.dim(); ++i) os << (i ? "," : "") << g.weight(i);
  os << ")";
  return os.str();
}

Character make_character(Int value, Int order) { return {residue(value, order), order}; }

Character tensor(Character a, Character b) {
  if (a.order != b.order) throw std::invalid_argument("characters of different groups");
  return make_character(a.value + b.value, a.order);
}

std::string to_string(const CharacterSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (Int v : s.values) {
    os << (first ? "" : ",") << "chi" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

Rational LatticePoint::coordinate(int i) const {
  return Rational(scaled[static_cast<std::size_t>(i)], denominator);
}

std::string to_string(const LatticePoint& p) {
  std::ostringstream os;
  os << "(" << p.scaled[0] << "," << p.scaled[1] << "," << p.scaled[2] << ")/" << p.denominator;
  return os.str();
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int residue(Int k, Int r) {
  Int m = k % r;
  return m < 0 ? m + r : m;
}

Int reduce_mod(Int k, Int r) {
  if (r < 1) throw std::invalid_argument("reduce_mod needs r >= 1");
  Int m = residue(k, r);
  return m == 0 ? r : m;
}

std::optional<Int> mod_inverse(Int a, Int r) {
  if (r == 1) return 0;
  a = residue(a, r);
  // extended Euclid
  Int old_r = a, cur_r = r, old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    Int q = old_r / cur_r;
    Int t = old_r - q * cur_r;
    old_r = cur_r;
    cur_r = t;
    t = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = t;
  }
  if (old_r != 1) return std::nullopt;
  return residue(old_s, r);
}

Int dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Int det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 scale(Int k, const Vec3& a) { return {k * a[0], k * a[1], k * a[2]}; }
bool is_zero(const Vec3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

Vec3 primitive(const Vec3& a) {
  Int g = gcd(gcd(std::abs(a[0]), std::abs(a[1])), std::abs(a[2]));
  if (g == 0) return a;
  return {a[0] / g, a[1] / g, a[2] / g};
}

bool same_direction(const Vec3& a, const Vec3& b) {
  return is_zero(cross(a, b)) && dot(a, b) > 0;
}

bool in_lattice(const GroupAction& g, const LatticePoint& p) {
  const Int r = g.order();
  if (p.denominator != r) return false;
  for (Int k = 0; k < r; ++k) {
    bool ok = true;
    for (int i = 0; i < g.dim() && ok; ++i)
      ok = residue(p.scaled[static_cast<std::size_t>(i)] - k * g.weight(i), r) == 0;
    for (int i = g.dim(); i < 3 && ok; ++i) ok = p.scaled[static_cast<std::size_t>(i)] == 0;
    if (ok) return true;
  }
  return false;
}

LatticePoint primitive_in_lattice(const GroupAction& g, const Vec3& direction) {
  if (is_zero(direction)) throw std::invalid_argument("zero direction has no lattice ray");
  const Vec3 d = primitive(direction);
  const Int r = g.order();
  for (Int s = 1; s <= r; ++s) {
    LatticePoint p{scale(s, d), r};
    if (in_lattice(g, p)) return p;
  }
  // s = r always lands in Z^n, which is contained in N
  throw std::logic_error("unreachable: r * d is integral");
}

Vec3 primitive_in_dual(const GroupAction& g, const Vec3& normal) {
  if (is_zero(normal)) throw std::invalid_argument("zero normal");
  const Vec3 d = primitive(normal);
  const Int r = g.order();
  Int pairing = 0;
  for (int i = 0; i < g.dim(); ++i) pairing += d[static_cast<std::size_t>(i)] * g.weight(i);
  for (Int t = 1;; ++t)
    if (residue(t * pairing, r) == 0) return scale(t, d);
}

LatticePoint basis_ray(const GroupAction& g, int i) {
  LatticePoint p{{0, 0, 0}, g.order()};
  p.scaled[static_cast<std::size_t>(i)] = g.order();
  return p;
}

std::array<LatticePoint, 3> nearest_lattice_points(const GroupAction& g) {
  if (!g.is_terminal() || g.order() == 1)
    throw InvalidGroup("nearest lattice points need a nontrivial terminal action");
  const Int r = g.order();
  const Int a = g.weight(1);
  const Int alpha = *mod_inverse(a, r);
  const Int beta = *mod_inverse(r - a, r);
  LatticePoint p1{{1, a, r - a}, r};
  LatticePoint p2{{reduce_mod(alpha, r), 1, reduce_mod(alpha * (-a), r)}, r};
  LatticePoint p3{{reduce_mod(beta, r), reduce_mod(beta * a, r), 1}, r};
  return {p1, p2, p3};
}

}  // namespace ghilb
