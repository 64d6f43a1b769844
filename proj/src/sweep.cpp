#include "ghilb/sweep.hpp"

#include <atomic>
#include <thread>

#include "ghilb/characters.hpp"
#include "ghilb/small_resolution.hpp"

namespace ghilb {

bool SweepRow::ok() const {
  return valleys_ok && ray_law_ok && valency_ok && resolve_ok && theorem_ok && coverage_ok && cables_ok;
}

SweepRow sweep_group(Int r, Int a, std::size_t samples) {
  SweepRow row;
  row.r = r;
  row.a = a;
  try {
    const GroupAction g = GroupAction::terminal(r, a);
    const Fan fan = build_fan(g);
    row.cones = fan.cones.size();
    row.conifolds = fan.conifold_count();

    row.valleys_ok = true;
    row.ray_law_ok = true;
    for (const auto& c : fan.cones) {
      const auto v = valleys(c.graph).count();
      row.valleys_ok = row.valleys_ok && v <= 2;
      row.ray_law_ok = row.ray_law_ok && ((c.cone.vrep.rays.size() == 4) == (v == 2)) &&
                       (c.cone.vrep.rays.size() == 3 || c.cone.vrep.rays.size() == 4);
    }
    if (!row.valleys_ok) row.detail += "valley bound; ";
    if (!row.ray_law_ok) row.detail += "ray-count law; ";

    try {
      classify_vertices(fan, true);
      row.valency_ok = true;
    } catch (const ValencyOutOfRange& e) {
      row.detail += std::string(e.what()) + "; ";
    }

    try {
      const ResolvedFan res = resolve(fan);
      row.resolve_ok = res.rays == fan.rays && res.diagonals.size() == row.conifolds;
      for (const auto& d : res.diagonals) {
        if (d.smooth_diagonals == 1) ++row.unique_smooth_diagonals;
        const auto curve = exceptional_curve_character(fan.cones[d.cone].graph);
        row.resolve_ok = row.resolve_ok && curve.character == d.ratio.character;
      }
      if (!row.resolve_ok) row.detail += "resolution; ";
    } catch (const std::exception& e) {
      row.detail += std::string(e.what()) + "; ";
    }

    if (row.valency_ok) {
      const DecorationReport rep = verify_theorem(fan);
      row.theorem_ok = rep.ok();
      if (!row.theorem_ok) row.detail += "special characters; ";
    }

    for (const auto& item : structural_checks(fan, samples).items) {
      if (item.name == "coverage") row.coverage_ok = item.ok;
      if (item.name == "cables") row.cables_ok = item.ok;
      if (!item.ok) row.detail += item.name + ": " + item.detail + "; ";
    }
  } catch (const std::exception& e) {
    row.detail += std::string(e.what()) + "; ";
  }
  return row;
}

std::vector<std::pair<Int, Int>> terminal_pairs(Int lo, Int hi) {
  std::vector<std::pair<Int, Int>> out;
  for (Int r = std::max<Int>(lo, 2); r <= hi; ++r)
    for (Int a = 1; 2 * a < r; ++a)
      if (gcd(r, a) == 1) out.emplace_back(r, a);
  return out;
}

std::vector<SweepRow> sweep(const std::vector<std::pair<Int, Int>>& pairs, std::size_t samples, unsigned workers) {
  std::vector<SweepRow> rows(pairs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) rows[i] = sweep_group(pairs[i].first, pairs[i].second, samples);
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(pairs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace ghilb
