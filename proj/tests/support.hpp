#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ghilb/fan.hpp"

namespace support {

using namespace ghilb;

inline LatticePoint pt(Int r, Int x, Int y, Int z) { return LatticePoint{{x, y, z}, r}; }

inline CharacterSet chars(Int r, std::initializer_list<Int> values) { return CharacterSet{r, std::set<Int>(values)}; }

inline std::vector<Monomial> mons(std::initializer_list<const char*> texts) {
  std::vector<Monomial> out;
  for (auto t : texts) out.push_back(parse_monomial(t));
  return out;
}

inline GGraph span(const GroupAction& g, std::initializer_list<const char*> gens) {
  return GGraph::from_span(g, mons(gens));
}

/// Index of the cone with exactly these rays, or kNoCone.
inline std::size_t find_cone(const Fan& fan, std::vector<LatticePoint> rays) {
  std::sort(rays.begin(), rays.end());
  for (std::size_t i = 0; i < fan.cones.size(); ++i)
    if (fan.cones[i].cone.vrep.rays == rays) return i;
  return kNoCone;
}

inline std::size_t find_wall(const Fan& fan, LatticePoint a, LatticePoint b) {
  std::vector<LatticePoint> rays{a, b};
  std::sort(rays.begin(), rays.end());
  for (std::size_t i = 0; i < fan.walls.size(); ++i)
    if (fan.walls[i].rays == rays) return i;
  return kNoCone;
}

/// Ray names for 1/10(1,3,7): v_i = i(1,3,7) mod 10, u_i = v_i + e1,
/// u'1 = v1 + 2 e1, and e1..e3.
inline LatticePoint named_ray_10(const std::string& name) {
  const Int r = 10;
  if (name == "e1") return pt(r, 10, 0, 0);
  if (name == "e2") return pt(r, 0, 10, 0);
  if (name == "e3") return pt(r, 0, 0, 10);
  if (name == "u'1") return pt(r, 21, 3, 7);
  const Int i = std::stoll(name.substr(1));
  LatticePoint p = pt(r, i % r, (3 * i) % r, (7 * i) % r);
  if (name[0] == 'u') p.scaled[0] += r;
  return p;
}

/// Ray names for 1/7(1,2,3): v_i = i(1,2,3) mod 7, u1 = v1 + e1.
inline LatticePoint named_ray_7(const std::string& name) {
  const Int r = 7;
  if (name == "e1") return pt(r, 7, 0, 0);
  if (name == "e2") return pt(r, 0, 7, 0);
  if (name == "e3") return pt(r, 0, 0, 7);
  if (name == "u1") return pt(r, 8, 2, 3);
  const Int i = std::stoll(name.substr(1));
  return pt(r, i % r, (2 * i) % r, (3 * i) % r);
}

}  // namespace support
