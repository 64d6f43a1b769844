#include "ghilb/small_resolution.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ghilb {

bool is_smooth_cone(const GroupAction& g, const std::vector<LatticePoint>& rays) {
  const Int r = g.order();
  Int covolume = 1;
  for (int i = 0; i < g.dim(); ++i) covolume *= r;
  covolume /= g.lattice_index();
  if (g.dim() == 3) {
    if (rays.size() != 3) return false;
    const Int d = det3(rays[0].scaled, rays[1].scaled, rays[2].scaled);
    return d == covolume || d == -covolume;
  }
  if (rays.size() != 2) return false;
  const Int d = rays[0].scaled[0] * rays[1].scaled[1] - rays[0].scaled[1] * rays[1].scaled[0];
  return d == covolume || d == -covolume;
}

std::array<std::array<LatticePoint, 2>, 2> diagonals(const std::vector<LatticePoint>& rays) {
  if (rays.size() != 4 || !is_parallelogram(rays)) throw std::invalid_argument("diagonals need a parallelogram cone");
  // opposite corners share the midpoint of the parallelogram
  for (std::size_t j = 1; j < 4; ++j) {
    std::vector<std::size_t> rest;
    for (std::size_t k = 1; k < 4; ++k)
      if (k != j) rest.push_back(k);
    if (add(rays[0].scaled, rays[j].scaled) == add(rays[rest[0]].scaled, rays[rest[1]].scaled)) {
      std::array<LatticePoint, 2> a{rays[0], rays[j]};
      std::array<LatticePoint, 2> b{rays[rest[0]], rays[rest[1]]};
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return {a, b};
    }
  }
  throw std::logic_error("parallelogram without diagonals");
}

namespace {

std::array<std::vector<LatticePoint>, 2> split(const std::vector<LatticePoint>& rays, const std::array<LatticePoint, 2>& d) {
  std::array<std::vector<LatticePoint>, 2> pieces;
  std::size_t k = 0;
  for (const auto& p : rays) {
    if (p == d[0] || p == d[1]) continue;
    pieces[k] = {d[0], d[1], p};
    std::sort(pieces[k].begin(), pieces[k].end());
    ++k;
  }
  return pieces;
}

}  // namespace

Diagonal choose_diagonal(const GroupAction& g, const Cone& cone) {
  const auto& rays = cone.vrep.rays;
  const auto both = diagonals(rays);
  Diagonal out;
  int chosen = -1;
  for (int i = 0; i < 2; ++i) {
    const auto pieces = split(rays, both[static_cast<std::size_t>(i)]);
    if (is_smooth_cone(g, pieces[0]) && is_smooth_cone(g, pieces[1])) ++out.smooth_diagonals;
    const MonomialRatio q = wall_ratio(g, {both[static_cast<std::size_t>(i)][0], both[static_cast<std::size_t>(i)][1]});
    if (q.first[0] > 0 && q.first[1] == 0 && q.first[2] == 0 && q.second[0] == 0) {
      if (chosen >= 0) throw NoSmoothDiagonal("both diagonals cut an x^i : y^* z^* ratio in cone at " + to_string(rays[0]));
      chosen = i;
      out.ratio = q;
    }
  }
  if (chosen < 0) throw NoSmoothDiagonal("no diagonal cuts an x^i : y^* z^* ratio in cone at " + to_string(rays[0]));
  out.rays = both[static_cast<std::size_t>(chosen)];
  out.pieces = split(rays, out.rays);
  if (!is_smooth_cone(g, out.pieces[0]) || !is_smooth_cone(g, out.pieces[1]))
    throw NoSmoothDiagonal("chosen diagonal leaves a singular cone at " + to_string(rays[0]));
  return out;
}

ResolvedFan resolve(const Fan& fan) {
  ResolvedFan out{fan, {}, {}, fan.rays};
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    const auto& rays = fan.cones[c].cone.vrep.rays;
    if (rays.size() == 4) {
      Diagonal d = choose_diagonal(fan.group, fan.cones[c].cone);
      d.cone = c;
      out.cones.push_back(d.pieces[0]);
      out.cones.push_back(d.pieces[1]);
      out.diagonals.push_back(std::move(d));
    } else if (rays.size() == static_cast<std::size_t>(fan.group.dim())) {
      out.cones.push_back(rays);
    } else {
      throw std::invalid_argument("resolve expects simplicial or 4-ray cones");
    }
  }
  std::sort(out.cones.begin(), out.cones.end());
  std::set<LatticePoint> used;
  for (const auto& c : out.cones) used.insert(c.begin(), c.end());
  out.rays.assign(used.begin(), used.end());
  return out;
}

CurveCharacter exceptional_curve_character(const GGraph& graph) {
  const TwoValleyData d = two_valley_data(graph);
  const GroupAction& g = graph.group();
  const Diagonal diag = choose_diagonal(g, cone_of(graph));
  const Monomial x_power = monomial(d.i_x, 0, 0);
  if (!(diag.ratio.first == x_power) || diag.ratio.second[0] != 0)
    throw NotTwoValley("diagonal ratio " + to_string(diag.ratio) + " is not x^" + std::to_string(d.i_x) + " : y^* z^*");
  return {wt(g, x_power).value, diag.ratio};
}

}  // namespace ghilb
