#include <gtest/gtest.h>

#include "ghilb/fan.hpp"
#include "support.hpp"

using namespace ghilb;
using support::mons;
using support::pt;
using support::span;

namespace {
const GroupAction g10 = GroupAction::terminal(10, 3);
const GroupAction g7(7, {1, 2, 3});
}  // namespace

TEST(Monomial, ParseAndPrint) {
  EXPECT_EQ(parse_monomial("x^7 z"), monomial(7, 0, 1));
  EXPECT_EQ(parse_monomial("xy^2"), monomial(1, 2, 0));
  EXPECT_EQ(parse_monomial("1"), monomial(0, 0, 0));
  EXPECT_EQ(to_string(monomial(7, 0, 1)), "x^7 z");
  EXPECT_EQ(to_string(monomial(0, 0, 0)), "1");
  EXPECT_THROW(parse_monomial("w^2"), std::invalid_argument);
  EXPECT_THROW(parse_monomial("x^"), std::invalid_argument);
}

TEST(Monomial, GrlexAndWeight) {
  EXPECT_TRUE(grlex_less(monomial(0, 0, 5), monomial(1, 1, 4)));
  EXPECT_TRUE(grlex_less(monomial(0, 1, 0), monomial(1, 0, 0)));
  EXPECT_EQ(wt(g10, monomial(0, 1, 0)).value, 3);
  EXPECT_EQ(wt(g10, monomial(1, 2, 1)).value, 4);
  EXPECT_TRUE(divides(monomial(1, 0, 1), monomial(2, 3, 1)));
  EXPECT_FALSE(divides(monomial(0, 0, 2), monomial(2, 3, 1)));
  EXPECT_EQ(pairing(pt(10, 1, 3, 7), monomial(1, 1, 1)), Rational(11, 10));
}

TEST(Monomial, RatioOrdering) {
  auto q = ratio_from_normal(g10, Vec3{7, 0, -1});
  EXPECT_EQ(to_string(q), "x^7:z");
  EXPECT_EQ(q.character, 7);
  EXPECT_EQ(to_string(ratio_from_normal(g10, Vec3{-1, 7, 0})), "x:y^7");
  EXPECT_EQ(to_string(ratio_from_normal(g10, Vec3{0, 5, -5})), "y^5:z^5");
  EXPECT_THROW(ratio_from_normal(g10, Vec3{1, -1, 0}), std::invalid_argument);
}

TEST(GGraph, SpanClosure) {
  const GroupAction g8(8, {1, 3});
  EXPECT_EQ(span_closure(g8, mons({"x^2y", "xy^2"})).size(), 8u);
  EXPECT_EQ(span_closure(g10, mons({"x^6", "x^2z"})).size(), 10u);
  EXPECT_EQ(span_closure(g10, mons({"1"})).size(), 1u);
}

TEST(GGraph, Invariants) {
  EXPECT_NO_THROW(span(g10, {"x^9"}));
  EXPECT_THROW(span(g10, {"x^10"}), InvalidGGraph);          // 11 members
  EXPECT_THROW(span(g10, {"x^3", "y^2"}), InvalidGGraph);    // 6 members
  EXPECT_THROW(span(g7, {"x^7"}), InvalidGGraph);            // x^7 and 1 share chi0
  EXPECT_THROW(GGraph::from_members(g10, mons({"1", "x", "x^2", "x^3", "x^4", "x^5", "x^6", "x^7", "x^8", "y^2"})),
               InvalidGGraph);  // y^2 without y
  EXPECT_THROW(GGraph::from_members(GroupAction(2, {1, 1}), mons({"1", "z"})), InvalidGGraph);
  const auto trivial = GGraph::from_members(GroupAction::terminal(1, 1), mons({"1"}));
  EXPECT_EQ(trivial.size(), 1u);
}

TEST(GGraph, FromWeight) {
  // sum of the rays of the chart Span(x^9)
  EXPECT_EQ(ggraph_from_weight(g10, Vec3{1, 23, 27}), span(g10, {"x^9"}));
  // interior of the chart Span(y^2, x^2 y, x^2 z): rays v1, v2, v5
  EXPECT_EQ(ggraph_from_weight(g10, Vec3{8, 14, 16}), span(g10, {"y^2", "x^2y", "x^2z"}));
  EXPECT_EQ(ggraph_from_weight(GroupAction::terminal(1, 1), Vec3{3, 1, 2}).size(), 1u);
  EXPECT_THROW(ggraph_from_weight(g10, Vec3{0, 1, 1}), std::invalid_argument);
  // on the wall x^7 = z
  EXPECT_THROW(ggraph_from_weight(g10, Vec3{1, 13, 7}), TieError);
}

TEST(GGraph, FromWeightIsScaleInvariant) {
  for (Int k : {2, 3, 7}) EXPECT_EQ(ggraph_from_weight(g10, Vec3{8 * k, 14 * k, 16 * k}), span(g10, {"y^2", "x^2y", "x^2z"}));
}

TEST(GGraph, Socle) {
  EXPECT_EQ(socle(span(g10, {"x^9"})), mons({"x^9"}));
  const auto g8 = GGraph::from_members(g7, mons({"1", "x", "y", "y^2", "z", "z^2", "yz"}));
  EXPECT_EQ(socle(g8).size(), 4u);
  const auto tiny = GGraph::from_members(GroupAction::terminal(1, 1), mons({"1"}));
  EXPECT_EQ(socle(tiny), mons({"1"}));
  EXPECT_EQ(socle_of_set(mons({"1", "x", "y", "xy", "z"})).size(), 2u);
}

TEST(GGraph, Representative) {
  const auto g1 = span(g10, {"x^9"});
  EXPECT_EQ(g1.representative(monomial(0, 1, 0)), monomial(3, 0, 0));
  EXPECT_EQ(g1.representative(monomial(4, 0, 0)), monomial(4, 0, 0));
  const auto g2 = span(g10, {"x^6", "x^2z"});
  EXPECT_EQ(representative(g2, monomial(0, 0, 2)), monomial(4, 0, 0));
}

TEST(GGraph, AGamma) {
  EXPECT_EQ(a_gamma(span(g10, {"x^9"})), mons({"z", "y", "x^10"}));
  const auto g2 = a_gamma(span(g10, {"x^6", "x^2z"}));
  EXPECT_NE(std::find(g2.begin(), g2.end(), monomial(7, 0, 0)), g2.end());
  EXPECT_NE(std::find(g2.begin(), g2.end(), monomial(0, 0, 2)), g2.end());
  EXPECT_EQ(a_gamma(GGraph::from_members(GroupAction::terminal(1, 1), mons({"1"}))), mons({"z", "y", "x"}));
}

TEST(GGraph, Valleys) {
  EXPECT_EQ(valleys(span(g10, {"x^9"})).count(), 0u);
  const auto v10 = valleys(span(g10, {"y^6", "z", "xy"}));
  ASSERT_EQ(v10.y_valleys.size(), 1u);
  ASSERT_EQ(v10.z_valleys.size(), 1u);
  EXPECT_EQ(v10.y_valleys[0], (Valley{0, 1}));
  EXPECT_EQ(v10.z_valleys[0], (Valley{0, 0}));
  EXPECT_EQ(valleys(span(g10, {"y^2", "x^2y", "x^2z"})).count(), 1u);
}

TEST(GGraph, Cones) {
  const Cone c1 = cone_of(span(g10, {"x^9"}));
  EXPECT_EQ(c1.vrep.rays, (std::vector<LatticePoint>{pt(10, 0, 0, 10), pt(10, 0, 10, 0), pt(10, 1, 3, 7)}));
  EXPECT_EQ(c1.facets.size(), 3u);
  const Cone c15 = cone_of(span(g10, {"x", "y^6", "z^2"}));
  EXPECT_EQ(c15.vrep.rays,
            (std::vector<LatticePoint>{pt(10, 11, 3, 7), pt(10, 14, 2, 8), pt(10, 18, 4, 6), pt(10, 21, 3, 7)}));
  EXPECT_EQ(c15.facets.size(), 4u);
  const Cone octant = cone_of(GGraph::from_members(GroupAction::terminal(1, 1), mons({"1"})));
  EXPECT_EQ(octant.vrep.rays.size(), 3u);
  EXPECT_TRUE(octant.contains_in_interior(Vec3{1, 1, 1}));
}

TEST(GGraph, TwoValleyData) {
  const auto d12 = two_valley_data(span(g10, {"x^2", "y^3", "xz^2"}));
  EXPECT_EQ(d12, (TwoValleyData{3, 1, 0, 4, 0, 0, 3}));
  EXPECT_EQ(d12.i_x, d12.k_x + d12.j_x + 2);
  EXPECT_EQ(two_valley_data(span(g10, {"y^6", "z", "xy"})).i_x, 2);
  EXPECT_THROW(two_valley_data(span(g10, {"x^9"})), NotTwoValley);
}

TEST(GGraph, Gigsaw) {
  const auto g1 = span(g10, {"x^9"});
  const auto step = gigsaw(g1, {pt(10, 0, 10, 0), pt(10, 1, 3, 7)});
  EXPECT_EQ(step.graph, span(g10, {"x^6", "x^2z"}));
  EXPECT_EQ(step.gig, mons({"z", "xz", "x^2z"}));
  const auto back = gigsaw(step.graph, {pt(10, 0, 10, 0), pt(10, 1, 3, 7)});
  EXPECT_EQ(back.graph, g1);
  EXPECT_THROW(gigsaw(g1, {pt(10, 0, 10, 0), pt(10, 0, 0, 10)}), BoundaryWall);
  EXPECT_THROW(gigsaw(g1, {pt(10, 0, 10, 0), pt(10, 3, 9, 1)}), std::invalid_argument);
}

TEST(GGraph, BoundaryFacet) {
  EXPECT_TRUE(is_boundary_facet({pt(10, 0, 10, 0), pt(10, 0, 0, 10)}, 3));
  EXPECT_FALSE(is_boundary_facet({pt(10, 0, 10, 0), pt(10, 1, 3, 7)}, 3));
}
