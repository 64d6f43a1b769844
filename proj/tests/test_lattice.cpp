#include <gtest/gtest.h>

#include "ghilb/lattice.hpp"
#include "support.hpp"

using namespace ghilb;
using support::pt;

TEST(GroupAction, TerminalFamily) {
  const auto g = GroupAction::terminal(10, 3);
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(g.weights(), (std::vector<Int>{1, 3, 7}));
  EXPECT_TRUE(g.is_terminal());
  EXPECT_TRUE(g.is_isolated());
  EXPECT_EQ(g.lattice_index(), 10);
  EXPECT_EQ(to_string(g), "1/10(1,3,7)");
}

TEST(GroupAction, RejectsBadTerminalData) {
  EXPECT_THROW(GroupAction::terminal(10, 4), InvalidGroup);
  EXPECT_THROW(GroupAction::terminal(10, 7), InvalidGroup);  // a < r - a
  EXPECT_THROW(GroupAction::terminal(2, 1), InvalidGroup);
  EXPECT_THROW(GroupAction::terminal(7, 0), InvalidGroup);
  EXPECT_THROW(GroupAction(0, {1, 1, 1}), InvalidGroup);
  EXPECT_THROW(GroupAction(5, {1}), InvalidGroup);
}

TEST(GroupAction, TrivialGroup) {
  const auto g = GroupAction::terminal(1, 1);
  EXPECT_EQ(g.order(), 1);
  EXPECT_TRUE(g.is_terminal());
  EXPECT_EQ(g.lattice_index(), 1);
}

TEST(GroupAction, WeightsReducedModR) {
  const GroupAction g(7, {8, -5, 3});
  EXPECT_EQ(g.weights(), (std::vector<Int>{1, 2, 3}));
  EXPECT_FALSE(g.is_terminal());
  EXPECT_TRUE(g.is_isolated());
  EXPECT_FALSE(GroupAction(6, {1, 2, 3}).is_isolated());
  EXPECT_EQ(GroupAction(6, {2, 4, 0}).lattice_index(), 3);
}

TEST(Characters, TensorIsAdditionModR) {
  EXPECT_EQ(tensor(make_character(7, 10), make_character(5, 10)).value, 2);
  EXPECT_EQ(make_character(-1, 10).value, 9);
  EXPECT_THROW(tensor(make_character(1, 3), make_character(1, 4)), std::invalid_argument);
  EXPECT_EQ(to_string(support::chars(10, {5, 1})), "{chi1,chi5}");
}

TEST(Integers, ResiduesAndInverses) {
  EXPECT_EQ(residue(-21, 10), 9);
  EXPECT_EQ(reduce_mod(20, 10), 10);
  EXPECT_EQ(reduce_mod(-3, 10), 7);
  EXPECT_EQ(mod_inverse(3, 10), 7);
  EXPECT_FALSE(mod_inverse(4, 10).has_value());
  for (Int r = 2; r < 40; ++r)
    for (Int a = 1; a < r; ++a)
      if (auto inv = mod_inverse(a, r)) EXPECT_EQ(residue(a * *inv, r), 1);
}

TEST(Vectors, CrossDetPrimitive) {
  EXPECT_EQ(cross(Vec3{1, 0, 0}, Vec3{0, 1, 0}), (Vec3{0, 0, 1}));
  EXPECT_EQ(det3(Vec3{4, 2, 8}, Vec3{7, 1, 9}, Vec3{11, 3, 7}), 100);
  EXPECT_EQ(primitive(Vec3{-10, 40, -30}), (Vec3{-1, 4, -3}));
  EXPECT_EQ(primitive(Vec3{0, 0, 0}), (Vec3{0, 0, 0}));
  EXPECT_TRUE(same_direction(Vec3{1, 2, 3}, Vec3{2, 4, 6}));
  EXPECT_FALSE(same_direction(Vec3{1, 2, 3}, Vec3{-2, -4, -6}));
}

TEST(Lattice, Membership) {
  const auto g = GroupAction::terminal(10, 3);
  EXPECT_TRUE(in_lattice(g, pt(10, 1, 3, 7)));
  EXPECT_TRUE(in_lattice(g, pt(10, 21, 3, 7)));
  EXPECT_TRUE(in_lattice(g, pt(10, 10, 0, 0)));
  EXPECT_FALSE(in_lattice(g, pt(10, 1, 1, 1)));
  EXPECT_FALSE(in_lattice(g, pt(5, 1, 3, 7)));
}

TEST(Lattice, PrimitiveRays) {
  const auto g = GroupAction::terminal(10, 3);
  EXPECT_EQ(primitive_in_lattice(g, Vec3{1, 3, 7}), pt(10, 1, 3, 7));
  EXPECT_EQ(primitive_in_lattice(g, Vec3{2, 6, 14}), pt(10, 1, 3, 7));
  EXPECT_EQ(primitive_in_lattice(g, Vec3{1, 0, 0}), pt(10, 10, 0, 0));
  // (1,1,1) first meets N at (5,5,5)/10 = 5 (1,3,7)/10 mod Z^3
  EXPECT_EQ(primitive_in_lattice(g, Vec3{1, 1, 1}), pt(10, 5, 5, 5));
  EXPECT_THROW(primitive_in_lattice(g, Vec3{0, 0, 0}), std::invalid_argument);
}

TEST(Lattice, DualPrimitive) {
  const auto g = GroupAction::terminal(10, 3);
  EXPECT_EQ(primitive_in_dual(g, Vec3{7, 0, -1}), (Vec3{7, 0, -1}));
  EXPECT_EQ(primitive_in_dual(g, Vec3{-1, 3, 1}), (Vec3{-2, 6, 2}));
  EXPECT_EQ(primitive_in_dual(g, Vec3{1, 0, 0}), (Vec3{10, 0, 0}));
}

TEST(Lattice, NearestPoints) {
  const auto g = GroupAction::terminal(10, 3);
  const auto p = nearest_lattice_points(g);
  EXPECT_EQ(p[0], pt(10, 1, 3, 7));
  EXPECT_EQ(p[1], pt(10, 7, 1, 9));
  EXPECT_EQ(p[2], pt(10, 3, 9, 1));
  EXPECT_THROW(nearest_lattice_points(GroupAction(7, {1, 2, 3})), InvalidGroup);
  for (Int r = 3; r <= 30; ++r)
    for (Int a = 1; 2 * a < r; ++a) {
      if (gcd(r, a) != 1) continue;
      const auto g2 = GroupAction::terminal(r, a);
      for (const auto& q : nearest_lattice_points(g2)) EXPECT_TRUE(in_lattice(g2, q));
    }
}

TEST(Lattice, RationalCoordinates) {
  const auto p = pt(10, 5, 5, 5);
  EXPECT_EQ(p.coordinate(0), Rational(1, 2));
  EXPECT_EQ(to_string(p), "(5,5,5)/10");
}
