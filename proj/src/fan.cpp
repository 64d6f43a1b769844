#include "ghilb/fan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <sstream>

#include "ghilb/continued_fraction.hpp"

namespace ghilb {

namespace {

std::vector<LatticePoint> facet_rays(const Cone& cone, std::size_t f) {
  std::vector<LatticePoint> rays;
  for (auto idx : cone.facets[f]) rays.push_back(cone.vrep.rays[idx]);
  return rays;
}

FanCone make_cone(const GGraph& graph) { return FanCone{graph, cone_of(graph), socle(graph)}; }

}  // namespace

std::vector<std::size_t> Fan::cones_at_ray(const LatticePoint& ray) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones.size(); ++i)
    if (cones[i].cone.has_ray(ray)) out.push_back(i);
  return out;
}

std::vector<std::size_t> Fan::walls_at_ray(const LatticePoint& ray) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < walls.size(); ++i)
    if (std::find(walls[i].rays.begin(), walls[i].rays.end(), ray) != walls[i].rays.end()) out.push_back(i);
  return out;
}

bool Fan::has_ray(const LatticePoint& ray) const { return std::binary_search(rays.begin(), rays.end(), ray); }

std::size_t Fan::conifold_count() const {
  return static_cast<std::size_t>(
      std::count_if(cones.begin(), cones.end(), [](const FanCone& c) { return c.cone.vrep.rays.size() == 4; }));
}

GGraph default_seed(const GroupAction& g) {
  const Int r = g.order();
  if (gcd(g.weight(0), r) == 1) {
    std::vector<Monomial> powers;
    for (Int i = 0; i < r; ++i) powers.push_back(monomial(i, 0, 0));
    return GGraph::from_members(g, std::move(powers));
  }
  // generic point (1, s, s^2), moving to the next tower on a tie
  for (Int s = r + 1; s < 64 * (r + 1); ++s) {
    try {
      return ggraph_from_weight(g, Vec3{1, s, g.dim() == 3 ? s * s : 0});
    } catch (const TieError&) {
    }
  }
  throw SeedInvalid("no generic seed chart for " + to_string(g));
}

Fan build_fan(const GroupAction& g) {
  std::optional<GGraph> seed;
  try {
    seed = default_seed(g);
  } catch (const InvalidGGraph& e) {
    throw SeedInvalid(e.what());
  }
  return build_fan(g, *seed);
}

Fan build_fan(const GroupAction& g, const GGraph& seed) {
  if (!(seed.group() == g)) throw SeedInvalid("seed belongs to a different group");
  std::vector<FanCone> found;
  std::map<GGraph, std::size_t> index;
  std::map<std::vector<LatticePoint>, Wall> walls;
  std::deque<std::size_t> queue;

  try {
    found.push_back(make_cone(seed));
  } catch (const DegenerateCone& e) {
    throw SeedInvalid(e.what());
  }
  index.emplace(seed, 0);
  queue.push_back(0);

  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    const FanCone current = found[id];
    for (std::size_t f = 0; f < current.cone.facets.size(); ++f) {
      const auto rays = facet_rays(current.cone, f);
      auto it = walls.find(rays);
      if (it != walls.end()) continue;  // crossed from the other side already
      Wall wall;
      wall.rays = rays;
      wall.cones[0] = id;
      if (is_boundary_facet(rays, g.dim())) {
        walls.emplace(rays, wall);
        continue;
      }
      const GigsawResult next = gigsaw(current.graph, current.cone, f);
      auto [pos, fresh] = index.emplace(next.graph, found.size());
      if (fresh) {
        found.push_back(make_cone(next.graph));
        queue.push_back(pos->second);
      }
      wall.cones[1] = pos->second;
      wall.ratio = wall_ratio(g, rays);
      walls.emplace(rays, wall);
    }
  }

  // renumber deterministically
  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return found[a].graph < found[b].graph; });
  std::vector<std::size_t> renumber(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) renumber[order[i]] = i;

  Fan fan{g, {}, {}, {}};
  for (auto i : order) fan.cones.push_back(found[i]);
  for (auto& [key, wall] : walls) {
    wall.cones[0] = renumber[wall.cones[0]];
    if (wall.interior()) {
      wall.cones[1] = renumber[wall.cones[1]];
      if (wall.cones[0] > wall.cones[1]) std::swap(wall.cones[0], wall.cones[1]);
    }
    fan.walls.push_back(wall);
  }
  std::sort(fan.walls.begin(), fan.walls.end(), [](const Wall& a, const Wall& b) {
    return std::tie(a.cones, a.rays) < std::tie(b.cones, b.rays);
  });
  std::set<LatticePoint> rays;
  for (const auto& c : fan.cones) rays.insert(c.cone.vrep.rays.begin(), c.cone.vrep.rays.end());
  fan.rays.assign(rays.begin(), rays.end());
  return fan;
}

MonomialRatio wall_ratio(const GroupAction& g, const std::vector<LatticePoint>& rays) {
  Vec3 normal;
  if (g.dim() == 3) {
    if (rays.size() != 2) throw std::invalid_argument("a 3-D wall has two rays");
    normal = cross(rays[0].scaled, rays[1].scaled);
  } else {
    if (rays.size() != 1) throw std::invalid_argument("a 2-D wall has one ray");
    normal = Vec3{-rays[0].scaled[1], rays[0].scaled[0], 0};
  }
  return ratio_from_normal(g, primitive_in_dual(g, normal));
}

MonomialRatio wall_ratio(const Fan& fan, std::size_t wall) {
  const Wall& w = fan.walls.at(wall);
  if (w.ratio) return *w.ratio;
  return wall_ratio(fan.group, w.rays);
}

bool is_interior_ray(const LatticePoint& ray, int dim) {
  for (int i = 0; i < dim; ++i)
    if (ray.scaled[static_cast<std::size_t>(i)] <= 0) return false;
  return true;
}

std::string to_string(VertexCase c) {
  switch (c) {
    case VertexCase::kC1:
      return "C1";
    case VertexCase::kC2:
      return "C2";
    case VertexCase::kC3:
      return "C3";
    case VertexCase::kC4:
      return "C4";
    default:
      return "-";
  }
}

std::vector<VertexInfo> classify_vertices(const Fan& fan, bool strict) {
  std::vector<VertexInfo> out;
  if (fan.group.dim() != 3) return out;
  for (const auto& ray : fan.rays) {
    if (!is_interior_ray(ray, 3)) continue;
    VertexInfo v;
    v.ray = ray;
    v.interior = true;
    v.walls = fan.walls_at_ray(ray);
    v.valency = static_cast<int>(v.walls.size());
    auto other_end = [&](std::size_t w) {
      const auto& rs = fan.walls[w].rays;
      return rs[0] == ray ? rs[1] : rs[0];
    };
    for (std::size_t i = 0; i < v.walls.size(); ++i)
      for (std::size_t j = i + 1; j < v.walls.size(); ++j) {
        const Vec3 a = other_end(v.walls[i]).scaled;
        const Vec3 b = other_end(v.walls[j]).scaled;
        if (det3(a, ray.scaled, b) != 0) continue;
        const Vec3 left = cross(a, ray.scaled);
        const Vec3 right = cross(ray.scaled, b);
        if (!is_zero(left) && same_direction(left, right)) v.straight_pairs.emplace_back(v.walls[i], v.walls[j]);
      }
    switch (v.valency) {
      case 3:
        v.case_tag = VertexCase::kC1;
        break;
      case 4:
        v.case_tag = v.straight_pairs.size() == 2 ? VertexCase::kC3 : VertexCase::kC2;
        break;
      case 5:
        v.case_tag = VertexCase::kC4;
        break;
      default:
        if (strict) throw ValencyOutOfRange("interior vertex " + to_string(ray) + " has valency " + std::to_string(v.valency));
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool StructuralReport::ok() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.ok; });
}

std::size_t cable_count(const Fan& fan) {
  std::size_t n = 0;
  for (auto w : fan.walls_at_ray(basis_ray(fan.group, 0)))
    if (fan.walls[w].interior()) ++n;
  return n;
}

bool is_parallelogram(const std::vector<LatticePoint>& rays) {
  if (rays.size() != 4) return false;
  const std::array<std::array<int, 4>, 3> pairings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  for (const auto& p : pairings)
    if (add(rays[p[0]].scaled, rays[p[1]].scaled) == add(rays[p[2]].scaled, rays[p[3]].scaled)) return true;
  return false;
}

StructuralReport structural_checks(const Fan& fan, std::size_t samples, unsigned long long seed) {
  StructuralReport report;
  const GroupAction& g = fan.group;
  const int n = g.dim();

  {
    CheckItem item{"walls", true, ""};
    for (const auto& w : fan.walls) {
      const bool boundary = is_boundary_facet(w.rays, n);
      if (boundary == w.interior()) {
        item.ok = false;
        item.detail += "wall at " + to_string(w.rays[0]) + (boundary ? " on the boundary has two cones; " : " has one cone; ");
      }
    }
    report.items.push_back(item);
  }

  if (n == 3 && g.is_terminal() && g.order() > 1) {
    const Int r = g.order();
    const Int a = g.weight(1);
    const Int alpha = *mod_inverse(a, r);
    const Int c = residue(alpha * -a, r);
    const std::size_t expected = hj_expand(r, c).entries.size();
    const std::size_t cables = cable_count(fan);
    report.items.push_back({"cables", cables == expected,
                            std::to_string(cables) + " cables at e1, expected " + std::to_string(expected)});

    CheckItem near{"nearest_points", true, ""};
    for (const auto& p : nearest_lattice_points(g))
      if (!fan.has_ray(p)) {
        near.ok = false;
        near.detail += to_string(p) + " missing; ";
      }
    report.items.push_back(near);

    CheckItem par{"parallelograms", true, ""};
    for (const auto& c : fan.cones)
      if (c.cone.vrep.rays.size() == 4 && !is_parallelogram(c.cone.vrep.rays)) {
        par.ok = false;
        par.detail += "cone " + to_string(c.cone.vrep.rays[0]) + "... is not a parallelogram; ";
      }
    report.items.push_back(par);
  }

  CheckItem cover{"coverage", true, ""};
  std::mt19937_64 rng(seed);
  const Int bound = 1000 * g.order();
  std::uniform_int_distribution<Int> coord(1, bound);
  std::size_t misses = 0, overlaps = 0, mismatches = 0, on_walls = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    Vec3 w{0, 0, 0};
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = coord(rng);
    std::vector<std::size_t> inside, closed;
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
      if (fan.cones[c].cone.contains_in_interior(w)) inside.push_back(c);
      if (fan.cones[c].cone.contains(w)) closed.push_back(c);
    }
    if (inside.size() > 1) {
      ++overlaps;
    } else if (inside.size() == 1) {
      try {
        if (!(ggraph_from_weight(g, w) == fan.cones[inside[0]].graph)) ++mismatches;
      } catch (const TieError&) {
        ++mismatches;
      }
    } else if (closed.size() >= 2) {
      ++on_walls;
    } else {
      ++misses;
    }
  }
  cover.ok = misses == 0 && overlaps == 0 && mismatches == 0;
  std::ostringstream os;
  os << samples << " samples: " << misses << " gaps, " << overlaps << " overlaps, " << mismatches
     << " chart mismatches, " << on_walls << " on walls";
  cover.detail = os.str();
  report.items.push_back(cover);
  return report;
}

}  // namespace ghilb
