#include "ghilb/ggraph.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <tuple>

namespace ghilb {

namespace {

bool has_zero_tail(const Monomial& m, int dim) {
  for (int i = dim; i < 3; ++i)
    if (m[i] != 0) return false;
  return true;
}

Monomial lower(const Monomial& m, int i) {
  Monomial d = m;
  d.exponents[static_cast<std::size_t>(i)] -= 1;
  return d;
}

Monomial raise(const Monomial& m, int i) {
  Monomial d = m;
  d.exponents[static_cast<std::size_t>(i)] += 1;
  return d;
}

}  // namespace

GGraph::GGraph(GroupAction g, std::vector<Monomial> by_character)
    : group_(std::move(g)), by_character_(std::move(by_character)), members_(by_character_) {
  std::sort(members_.begin(), members_.end(), GrlexLess{});
}

GGraph GGraph::from_members(const GroupAction& g, std::vector<Monomial> members) {
  const Int r = g.order();
  if (static_cast<Int>(members.size()) != r) throw InvalidGGraph("a G-graph has exactly r members");
  std::vector<std::optional<Monomial>> slots(static_cast<std::size_t>(r));
  for (const auto& m : members) {
    if (!has_zero_tail(m, g.dim())) throw InvalidGGraph("monomial uses a missing variable");
    for (int i = 0; i < 3; ++i)
      if (m[i] < 0 || m[i] >= r) throw InvalidGGraph("exponent outside [0, r-1]");
    auto& slot = slots[static_cast<std::size_t>(wt(g, m).value)];
    if (slot) throw InvalidGGraph("two members share the character of " + to_string(m));
    slot = m;
  }
  std::vector<Monomial> by_character;
  by_character.reserve(slots.size());
  for (auto& s : slots) by_character.push_back(*s);
  GGraph graph(g, std::move(by_character));
  for (const auto& m : graph.members_)
    for (int i = 0; i < g.dim(); ++i)
      if (m[i] > 0 && !graph.contains(lower(m, i)))
        throw InvalidGGraph("not closed under division at " + to_string(m));
  return graph;
}

GGraph GGraph::from_span(const GroupAction& g, const std::vector<Monomial>& gens) {
  return from_members(g, span_closure(g, gens));
}

bool GGraph::contains(const Monomial& m) const {
  return has_zero_tail(m, group_.dim()) && by_character_[static_cast<std::size_t>(wt(group_, m).value)] == m;
}

const Monomial& GGraph::representative(const Monomial& m) const {
  return by_character_[static_cast<std::size_t>(wt(group_, m).value)];
}

bool GGraph::operator<(const GGraph& o) const {
  return std::lexicographical_compare(members_.begin(), members_.end(), o.members_.begin(), o.members_.end(),
                                      GrlexLess{});
}

GGraph ggraph_from_weight(const GroupAction& g, const Vec3& w) {
  const int n = g.dim();
  for (int i = 0; i < n; ++i)
    if (w[static_cast<std::size_t>(i)] <= 0) throw std::invalid_argument("weight vector must be strictly positive");
  const Int r = g.order();

  // Best-first search from 1. Every divisor of a minimiser is itself a
  // minimiser, so only minimisers need expanding.
  using Entry = std::tuple<Int, Vec3>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::set<Vec3> seen;
  std::vector<std::optional<Monomial>> best(static_cast<std::size_t>(r));
  std::vector<Int> best_value(static_cast<std::size_t>(r), 0);
  Int found = 0;
  Int bound = 0;

  frontier.emplace(0, Vec3{0, 0, 0});
  seen.insert(Vec3{0, 0, 0});
  while (!frontier.empty()) {
    auto [value, e] = frontier.top();
    frontier.pop();
    if (found == r && value > bound) break;
    const Monomial m{e};
    const auto chi = static_cast<std::size_t>(wt(g, m).value);
    if (best[chi]) {
      if (best_value[chi] == value)
        throw TieError("characters tie between " + to_string(*best[chi]) + " and " + to_string(m));
      continue;
    }
    best[chi] = m;
    best_value[chi] = value;
    if (++found == r) bound = *std::max_element(best_value.begin(), best_value.end());
    for (int i = 0; i < n; ++i) {
      Vec3 next = e;
      next[static_cast<std::size_t>(i)] += 1;
      if (seen.insert(next).second) frontier.emplace(value + w[static_cast<std::size_t>(i)], next);
    }
  }
  std::vector<Monomial> members;
  members.reserve(best.size());
  for (auto& b : best) members.push_back(*b);
  return GGraph::from_members(g, std::move(members));
}

GGraph ggraph_from_weight(const GroupAction& g, const LatticePoint& w) { return ggraph_from_weight(g, w.scaled); }

std::vector<Monomial> socle_of_set(const std::vector<Monomial>& set) {
  std::vector<Monomial> out;
  for (const auto& m : set) {
    bool maximal = true;
    for (const auto& o : set)
      if (!(o == m) && divides(m, o)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

std::vector<Monomial> socle(const GGraph& graph) {
  std::vector<Monomial> out;
  const int n = graph.group().dim();
  for (const auto& m : graph.members()) {
    bool maximal = true;
    for (int i = 0; i < n && maximal; ++i) maximal = !graph.contains(raise(m, i));
    if (maximal) out.push_back(m);
  }
  return out;
}

std::vector<Monomial> span_closure(const GroupAction& g, const std::vector<Monomial>& gens) {
  std::set<Vec3> all;
  for (const auto& u : gens) {
    if (!has_zero_tail(u, g.dim())) throw InvalidGGraph("generator uses a missing variable");
    for (Int a = 0; a <= u[0]; ++a)
      for (Int b = 0; b <= u[1]; ++b)
        for (Int c = 0; c <= u[2]; ++c) all.insert(Vec3{a, b, c});
  }
  std::vector<Monomial> out;
  for (const auto& e : all) out.push_back(Monomial{e});
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

ValleyReport valleys(const GGraph& graph) {
  ValleyReport report;
  if (graph.group().dim() != 3) return report;
  for (const auto& m : graph.members()) {
    for (int other : {1, 2}) {
      if (m[3 - other] != 0) continue;  // x^m y^n has no z, x^m z^n has no y
      const Monomial right = raise(m, 0);
      const Monomial up = raise(m, other);
      if (graph.contains(right) && graph.contains(up) && !graph.contains(raise(right, other))) {
        Valley v{m[0], m[other]};
        (other == 1 ? report.y_valleys : report.z_valleys).push_back(v);
      }
    }
  }
  return report;
}

std::vector<Monomial> a_gamma(const GGraph& graph) {
  const int n = graph.group().dim();
  std::set<Vec3> gens;
  for (const auto& m : graph.members())
    for (int i = 0; i < n; ++i) {
      const Monomial u = raise(m, i);
      if (graph.contains(u)) continue;
      bool minimal = true;
      for (int j = 0; j < n && minimal; ++j)
        if (u[j] > 0) minimal = graph.contains(lower(u, j));
      if (minimal) gens.insert(u.exponents);
    }
  std::vector<Monomial> out;
  for (const auto& e : gens) out.push_back(Monomial{e});
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

const Monomial& representative(const GGraph& graph, const Monomial& m) { return graph.representative(m); }

bool Cone::contains(const Vec3& w) const {
  return std::all_of(hrep.inequalities.begin(), hrep.inequalities.end(), [&](const Vec3& n) { return dot(n, w) >= 0; });
}

bool Cone::contains_in_interior(const Vec3& w) const {
  return std::all_of(hrep.inequalities.begin(), hrep.inequalities.end(), [&](const Vec3& n) { return dot(n, w) > 0; });
}

bool Cone::has_ray(const LatticePoint& p) const {
  return std::find(vrep.rays.begin(), vrep.rays.end(), p) != vrep.rays.end();
}

Cone cone_of(const GGraph& graph) {
  const GroupAction& g = graph.group();
  const int n = g.dim();
  Cone cone;
  std::set<Vec3> normals;
  for (const auto& u : a_gamma(graph)) normals.insert(primitive(sub(u.exponents, graph.representative(u).exponents)));
  for (int i = 0; i < n; ++i) {
    Vec3 e{0, 0, 0};
    e[static_cast<std::size_t>(i)] = 1;
    normals.insert(e);
  }
  cone.hrep.inequalities.assign(normals.begin(), normals.end());
  const auto& ineq = cone.hrep.inequalities;

  std::vector<Vec3> candidates;
  if (n == 3) {
    for (std::size_t i = 0; i < ineq.size(); ++i)
      for (std::size_t j = i + 1; j < ineq.size(); ++j) candidates.push_back(cross(ineq[i], ineq[j]));
  } else {
    for (const auto& v : ineq) candidates.push_back(Vec3{-v[1], v[0], 0});
  }
  std::set<Vec3> directions;
  for (const auto& c : candidates) {
    if (is_zero(c)) continue;
    for (const Vec3& s : {c, scale(-1, c)}) {
      if (std::all_of(ineq.begin(), ineq.end(), [&](const Vec3& v) { return dot(v, s) >= 0; }))
        directions.insert(primitive(s));
    }
  }
  for (const auto& d : directions) cone.vrep.rays.push_back(primitive_in_lattice(g, d));
  std::sort(cone.vrep.rays.begin(), cone.vrep.rays.end());
  const auto& rays = cone.vrep.rays;

  bool full = false;
  if (n == 3) {
    for (std::size_t i = 0; i < rays.size() && !full; ++i)
      for (std::size_t j = i + 1; j < rays.size() && !full; ++j)
        for (std::size_t k = j + 1; k < rays.size() && !full; ++k)
          full = det3(rays[i].scaled, rays[j].scaled, rays[k].scaled) != 0;
  } else {
    for (std::size_t i = 0; i < rays.size() && !full; ++i)
      for (std::size_t j = i + 1; j < rays.size() && !full; ++j)
        full = !is_zero(cross(rays[i].scaled, rays[j].scaled));
  }
  if (!full) throw DegenerateCone("sigma(Gamma) is not full-dimensional");

  if (n == 3) {
    for (std::size_t i = 0; i < rays.size(); ++i)
      for (std::size_t j = i + 1; j < rays.size(); ++j) {
        const bool shared = std::any_of(ineq.begin(), ineq.end(), [&](const Vec3& v) {
          return dot(v, rays[i].scaled) == 0 && dot(v, rays[j].scaled) == 0;
        });
        if (shared) cone.facets.push_back({i, j});
      }
  } else {
    for (std::size_t i = 0; i < rays.size(); ++i) cone.facets.push_back({i});
  }
  return cone;
}

TwoValleyData two_valley_data(const GGraph& graph) {
  const auto report = valleys(graph);
  if (report.y_valleys.size() != 1 || report.z_valleys.size() != 1)
    throw NotTwoValley("expected exactly one y-valley and one z-valley");
  TwoValleyData d;
  d.k_x = report.y_valleys[0].x_exponent;
  d.k_y = report.y_valleys[0].other_exponent;
  d.j_x = report.z_valleys[0].x_exponent;
  d.j_z = report.z_valleys[0].other_exponent;
  auto first_missing_power = [&](int var) {
    Int k = 0;
    while (graph.contains(Monomial{[&] {
      Vec3 e{0, 0, 0};
      e[static_cast<std::size_t>(var)] = k;
      return e;
    }()}))
      ++k;
    return k;
  };
  d.i_x = first_missing_power(0);
  d.j_y = first_missing_power(1);
  d.k_z = first_missing_power(2);

  const GroupAction& g = graph.group();
  const bool ok = d.i_x == d.k_x + d.j_x + 2 &&
                  wt(g, monomial(0, 0, d.k_z - 1)) == wt(g, monomial(d.k_x + 1, d.k_y + 1, 0)) &&
                  wt(g, monomial(0, d.j_y - 1, 0)) == wt(g, monomial(d.j_x + 1, 0, d.j_z + 1)) &&
                  span_closure(g, two_valley_span(d)) == graph.members();
  if (!ok) throw NotTwoValley("two-valley exponents violate the span template");
  return d;
}

std::vector<Monomial> two_valley_span(const TwoValleyData& d) {
  return {monomial(d.i_x - 1, d.k_y, 0), monomial(d.k_x, d.j_y - 1, 0), monomial(d.i_x - 1, 0, d.j_z),
          monomial(d.j_x, 0, d.k_z - 1)};
}

bool is_boundary_facet(const std::vector<LatticePoint>& facet_rays, int dim) {
  for (int i = 0; i < dim; ++i)
    if (std::all_of(facet_rays.begin(), facet_rays.end(),
                    [&](const LatticePoint& p) { return p.scaled[static_cast<std::size_t>(i)] == 0; }))
      return true;
  return false;
}

GigsawResult gigsaw(const GGraph& graph, const Cone& cone, std::size_t facet) {
  const GroupAction& g = graph.group();
  const int n = g.dim();
  std::vector<LatticePoint> facet_rays;
  for (auto idx : cone.facets.at(facet)) facet_rays.push_back(cone.vrep.rays[idx]);
  if (is_boundary_facet(facet_rays, n)) throw BoundaryWall("facet lies on the boundary of the octant");

  Vec3 normal = n == 3 ? cross(facet_rays[0].scaled, facet_rays[1].scaled)
                       : Vec3{-facet_rays[0].scaled[1], facet_rays[0].scaled[0], 0};
  normal = primitive(normal);
  for (const auto& ray : cone.vrep.rays) {
    const Int s = dot(normal, ray.scaled);
    if (s != 0) {
      if (s < 0) normal = scale(-1, normal);
      break;
    }
  }
  Vec3 centre{0, 0, 0};
  for (const auto& p : facet_rays) centre = add(centre, p.scaled);

  for (Int k = 1; k < (Int{1} << 40); k *= 2) {
    const Vec3 w = sub(scale(k, centre), normal);
    bool positive = true;
    for (int i = 0; i < n; ++i) positive = positive && w[static_cast<std::size_t>(i)] > 0;
    if (!positive) continue;
    std::optional<GGraph> next;
    try {
      next = ggraph_from_weight(g, w);
    } catch (const TieError&) {
      continue;
    }
    const Cone next_cone = cone_of(*next);
    const bool adjacent = std::all_of(facet_rays.begin(), facet_rays.end(),
                                      [&](const LatticePoint& p) { return next_cone.has_ray(p); });
    if (!adjacent) continue;
    GigsawResult out{*next, {}};
    for (const auto& m : next->members())
      if (!graph.contains(m)) out.gig.push_back(m);
    return out;
  }
  throw std::runtime_error("wall-crossing found no neighbouring G-graph");
}

GigsawResult gigsaw(const GGraph& graph, const std::vector<LatticePoint>& facet_rays) {
  const Cone cone = cone_of(graph);
  std::vector<LatticePoint> wanted = facet_rays;
  std::sort(wanted.begin(), wanted.end());
  for (std::size_t f = 0; f < cone.facets.size(); ++f) {
    std::vector<LatticePoint> rays;
    for (auto idx : cone.facets[f]) rays.push_back(cone.vrep.rays[idx]);
    if (rays == wanted) return gigsaw(graph, cone, f);
  }
  throw std::invalid_argument("rays do not span a facet of sigma(Gamma)");
}

}  // namespace ghilb
