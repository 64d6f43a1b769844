#include <gtest/gtest.h>

#include "ghilb/small_resolution.hpp"
#include "support.hpp"

using namespace ghilb;
using support::find_cone;
using support::pt;

namespace {

const Fan& fan10() {
  static const Fan fan = build_fan(GroupAction::terminal(10, 3));
  return fan;
}

LatticePoint n10(const char* name) { return support::named_ray_10(name); }

// |det| of three scaled rays against r^3 / index; N / Z^3 is cyclic of
// order r when some weight is a unit mod r
bool smooth_by_det(const GroupAction& g, const std::vector<LatticePoint>& rays) {
  const Int r = g.order();
  const Int d = det3(rays[0].scaled, rays[1].scaled, rays[2].scaled);
  return (d < 0 ? -d : d) * r == r * r * r;
}

}  // namespace

TEST(SmallResolution, SmoothCone) {
  const auto g = fan10().group;
  EXPECT_FALSE(is_smooth_cone(g, {basis_ray(g, 0), basis_ray(g, 1), basis_ray(g, 2)}));
  EXPECT_EQ(is_smooth_cone(g, {n10("e1"), n10("v1"), n10("e2")}), smooth_by_det(g, {n10("e1"), n10("v1"), n10("e2")}));
  for (const auto& c : fan10().cones)
    if (c.cone.vrep.rays.size() == 3) {
      EXPECT_TRUE(is_smooth_cone(g, c.cone.vrep.rays));
      EXPECT_TRUE(smooth_by_det(g, c.cone.vrep.rays));
    }
}

TEST(SmallResolution, DiagonalsOfParallelogram) {
  const auto cone = find_cone(fan10(), {n10("v7"), n10("u1"), n10("v4"), n10("u4")});
  ASSERT_NE(cone, kNoCone);
  const auto ds = diagonals(fan10().cones[cone].cone.vrep.rays);
  for (const auto& d : ds) EXPECT_NE(d[0], d[1]);
  EXPECT_NE(ds[0], ds[1]);
}

TEST(SmallResolution, ChosenDiagonals) {
  const ResolvedFan res = resolve(fan10());
  EXPECT_EQ(res.diagonals.size(), 6u);
  EXPECT_EQ(res.rays, fan10().rays);
  EXPECT_EQ(res.cones.size(), fan10().cones.size() + 6);

  const auto c10 = find_cone(fan10(), {n10("v7"), n10("u1"), n10("v4"), n10("u4")});
  bool seen10 = false;
  for (const auto& d : res.diagonals) {
    if (d.cone != c10) continue;
    seen10 = true;
    std::vector<LatticePoint> got{d.rays[0], d.rays[1]};
    std::sort(got.begin(), got.end());
    std::vector<LatticePoint> want{n10("v7"), n10("u1")};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want);
    EXPECT_EQ(to_string(d.ratio), "x^2:y^5z");
    EXPECT_EQ(d.ratio.character, 2);
  }
  EXPECT_TRUE(seen10);

  const auto c15 = find_cone(fan10(), {n10("u1"), n10("u4"), n10("u8"), n10("u'1")});
  ASSERT_NE(c15, kNoCone);
  const Diagonal d15 = choose_diagonal(fan10().group, fan10().cones[c15].cone);
  EXPECT_EQ(to_string(d15.ratio), "x^2:y^6z^2");
  EXPECT_EQ(d15.smooth_diagonals, 2);
}

TEST(SmallResolution, EveryPieceSmoothAndNoNewRays) {
  const ResolvedFan res = resolve(fan10());
  for (const auto& c : res.cones) {
    ASSERT_EQ(c.size(), 3u);
    EXPECT_TRUE(smooth_by_det(fan10().group, c));
    for (const auto& p : c) EXPECT_TRUE(fan10().has_ray(p));
  }
}

TEST(SmallResolution, BothDiagonalsSmoothForTerminalFamily) {
  for (Int r = 5; r <= 20; ++r)
    for (Int a = 1; 2 * a < r; ++a) {
      if (gcd(r, a) != 1) continue;
      const ResolvedFan res = resolve(build_fan(GroupAction::terminal(r, a)));
      for (const auto& d : res.diagonals) EXPECT_EQ(d.smooth_diagonals, 2) << r << "," << a;
    }
}

TEST(SmallResolution, ChoiceIsPureXPower) {
  for (Int r = 5; r <= 20; ++r)
    for (Int a = 1; 2 * a < r; ++a) {
      if (gcd(r, a) != 1) continue;
      const Fan fan = build_fan(GroupAction::terminal(r, a));
      for (const auto& d : resolve(fan).diagonals) {
        EXPECT_GT(d.ratio.first[0], 0);
        EXPECT_EQ(d.ratio.first[1] + d.ratio.first[2], 0);
        EXPECT_EQ(d.ratio.second[0], 0);
        const auto tv = two_valley_data(fan.cones[d.cone].graph);
        EXPECT_EQ(d.ratio.first[0], tv.i_x);
      }
    }
}

TEST(SmallResolution, CurveCharacter) {
  const auto c10 = find_cone(fan10(), {n10("v7"), n10("u1"), n10("v4"), n10("u4")});
  const auto curve = exceptional_curve_character(fan10().cones[c10].graph);
  EXPECT_EQ(curve.character, 2);
  EXPECT_EQ(to_string(curve.ratio), "x^2:y^5z");
  EXPECT_EQ(wt(fan10().group, monomial(2, 0, 0)).value, curve.character);
}

TEST(SmallResolution, NonConifoldRejected) {
  const auto g = fan10().group;
  for (const auto& c : fan10().cones)
    if (c.cone.vrep.rays.size() == 3) {
      EXPECT_THROW(choose_diagonal(g, c.cone), std::invalid_argument);
      EXPECT_THROW(exceptional_curve_character(c.graph), NotTwoValley);
      break;
    }
}

TEST(SmallResolution, TrivialAndTwoDimensional) {
  EXPECT_TRUE(resolve(build_fan(GroupAction::terminal(1, 1))).diagonals.empty());
  const ResolvedFan res = resolve(build_fan(GroupAction(8, {1, 3})));
  EXPECT_TRUE(res.diagonals.empty());
  EXPECT_EQ(res.cones.size(), 3u);
}
