#include "aisle_router/model.hpp"

#include <gtest/gtest.h>

#include <random>

#include "aisle_router/dp.hpp"
#include "test_util.hpp"

using namespace aisle_router;

namespace {

TourSubgraph e1_square() {
  TourSubgraph t;
  for (int s = 0; s < 3; ++s) t.set(aisle_edge(0, s), 1);
  for (int s = 0; s < 2; ++s) t.set(aisle_edge(1, s), 1);
  t.set(top_rail(0), 1);
  t.set(bottom_rail(0), 1);
  return t;
}

TEST(WarehouseInstance, RejectsNonInteriorPicks) {
  EXPECT_THROW(WarehouseInstance::create({10}, {{0}}, {}, {}, {0, 0}),
               InvalidInstanceError);
  EXPECT_THROW(WarehouseInstance::create({10}, {{10}}, {}, {}, {0, 0}),
               InvalidInstanceError);
  EXPECT_THROW(WarehouseInstance::create({10}, {{7, 3}}, {}, {}, {0, 0}),
               InvalidInstanceError);
}

TEST(WarehouseInstance, DepotSharingAPickOffsetMergesIntoOneStation) {
  auto w = WarehouseInstance::create({10}, {{3, 7}}, {}, {}, {0, 3});
  EXPECT_EQ(w.stations(0).size(), 2u);
  EXPECT_TRUE(w.stations(0)[0].is_depot);
  EXPECT_EQ(w.stations(0)[0].pick_index, 0);
  EXPECT_EQ(w.depot_vertex_id(), w.station_vertex_id(0, 0));
}

TEST(IsRectangular, Definition) {
  auto rect = WarehouseInstance::create({10, 10}, {{}, {}}, {2}, {2}, {0, 0});
  EXPECT_TRUE(is_rectangular(rect));
  auto unequal_aisles =
      WarehouseInstance::create({10, 8}, {{}, {}}, {2}, {2}, {0, 0});
  EXPECT_FALSE(is_rectangular(unequal_aisles));
  auto unequal_rails =
      WarehouseInstance::create({10, 10}, {{}, {}}, {2}, {3}, {0, 0});
  EXPECT_FALSE(is_rectangular(unequal_rails));
}

TEST(TourLength, EmptyDoubledAndSquare) {
  auto e1 = test_util::make_e1();
  EXPECT_EQ(tour_length(e1, TourSubgraph{}), 0);

  auto single = WarehouseInstance::create({10}, {{}}, {}, {}, {0, 0});
  TourSubgraph doubled;
  doubled.set(aisle_edge(0, 0), 2);
  EXPECT_EQ(tour_length(single, doubled), 20);

  EXPECT_EQ(tour_length(e1, e1_square()), 24);
}

TEST(TourLength, UnknownEdgeThrows) {
  auto e1 = test_util::make_e1();
  TourSubgraph t;
  t.set(aisle_edge(5, 0), 1);
  EXPECT_THROW(tour_length(e1, t), InvalidEdgeError);
  TourSubgraph r;
  r.set(top_rail(1), 1);  // only one rail pair exists
  EXPECT_THROW(tour_length(e1, r), InvalidEdgeError);
}

TEST(TourLength, AdditiveAndScalesLinearly) {
  auto e1 = test_util::make_e1();
  TourSubgraph a, b, both;
  a.set(aisle_edge(0, 0), 2);
  b.set(top_rail(0), 2);
  both.set(aisle_edge(0, 0), 2);
  both.set(top_rail(0), 2);
  EXPECT_EQ(tour_length(e1, a) + tour_length(e1, b), tour_length(e1, both));

  for (Length k : {2, 3, 7}) {
    auto scaled = WarehouseInstance::create({10 * k, 10 * k},
                                            {{3 * k, 7 * k}, {5 * k}}, {2 * k},
                                            {2 * k}, {0, 0});
    EXPECT_EQ(tour_length(scaled, e1_square()), k * tour_length(e1, e1_square()));
  }
}

TEST(ValidateTour, AcceptsTheSquare) {
  auto e1 = test_util::make_e1();
  EXPECT_TRUE(validate_tour(e1, e1_square()).ok());
}

TEST(ValidateTour, ReportsUncoveredPick) {
  auto e1 = test_util::make_e1();
  TourSubgraph t;  // covers aisle 1 only
  t.set(aisle_edge(0, 0), 2);
  t.set(aisle_edge(0, 1), 2);
  auto rep = validate_tour(e1, t);
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.violation->clause, TourViolation::Clause::UncoveredTarget);
  EXPECT_EQ(e1.vertex_name(rep.violation->vertex_id), "p2.1");
}

TEST(ValidateTour, ReportsDisconnection) {
  auto e1 = test_util::make_e1();
  TourSubgraph t;  // two doubled stubs, each covering its own aisle
  t.set(aisle_edge(0, 0), 2);
  t.set(aisle_edge(0, 1), 2);
  t.set(aisle_edge(1, 0), 2);
  auto rep = validate_tour(e1, t);
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.violation->clause, TourViolation::Clause::Disconnected);
}

TEST(ValidateTour, ReportsOddDegree) {
  auto e1 = test_util::make_e1();
  TourSubgraph t = e1_square();
  t.add(top_rail(0), 1);  // corners a1, a2 now have degree 3
  auto rep = validate_tour(e1, t);
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.violation->clause, TourViolation::Clause::OddDegree);
}

TEST(FullAisleDouble, SegmentwiseDefinition) {
  auto w = WarehouseInstance::create({10}, {{3, 7}}, {}, {}, {0, 0});
  TourSubgraph t;
  t.set(aisle_edge(0, 0), 2);
  t.set(aisle_edge(0, 1), 2);
  t.set(aisle_edge(0, 2), 2);
  EXPECT_TRUE(has_full_aisle_double(w, t, 0));
  t.set(aisle_edge(0, 1), 1);
  EXPECT_FALSE(has_full_aisle_double(w, t, 0));

  auto empty = WarehouseInstance::create({10}, {{}}, {}, {}, {0, 0});
  TourSubgraph d;
  d.set(aisle_edge(0, 0), 2);
  EXPECT_TRUE(has_full_aisle_double(empty, d, 0));
}

TEST(Canonicalize, ParityPreservingReduction) {
  TourSubgraph t;
  t.set(aisle_edge(0, 0), 4);
  t.set(aisle_edge(0, 1), 3);
  t.set(top_rail(0), 2);
  TourSubgraph c = canonicalize_multiplicities(t);
  EXPECT_EQ(c.mult(aisle_edge(0, 0)), 2);
  EXPECT_EQ(c.mult(aisle_edge(0, 1)), 1);
  EXPECT_EQ(c.mult(top_rail(0)), 2);
  EXPECT_EQ(canonicalize_multiplicities(c), c);
}

TEST(Canonicalize, KeepsVerdictAndNeverGrows) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    auto w = test_util::suite_instance(500 + round);
    TourSubgraph t;
    for (int j = 0; j < w.aisle_count(); ++j)
      for (int s = 0; s < w.segment_count(j); ++s)
        t.set(aisle_edge(j, s), static_cast<std::int64_t>(rng() % 5));
    for (int k = 0; k + 1 < w.aisle_count(); ++k) {
      t.set(top_rail(k), static_cast<std::int64_t>(rng() % 5));
      t.set(bottom_rail(k), static_cast<std::int64_t>(rng() % 5));
    }
    TourSubgraph c = canonicalize_multiplicities(t);
    EXPECT_EQ(validate_tour(w, t).ok(), validate_tour(w, c).ok());
    EXPECT_LE(tour_length(w, c), tour_length(w, t));
  }
}

TEST(PtsClass, EmptyRestrictionOfATargetFreeSideIsZeroClass) {
  auto e1 = test_util::make_e1();
  auto res = pts_class(e1, TourSubgraph{}, SideRestriction::right_of(0));
  ASSERT_TRUE(res.is_class());
  EXPECT_EQ(*res.cls, PtsClass::ZZZC);
  EXPECT_STREQ(to_label(*res.cls), "000C");
}

TEST(PtsClass, EmptyRestrictionWithUncoveredSideTargetsIsNoPts) {
  // the left side holds picks whose edges all lie inside it; an empty
  // restriction can never be completed into a tour
  auto e1 = test_util::make_e1();
  auto res = pts_class(e1, TourSubgraph{}, SideRestriction::left_of(1));
  EXPECT_FALSE(res.is_class());
}

TEST(PtsClass, SquareLeftPartIsOddOddOneComponent) {
  auto e1 = test_util::make_e1();
  auto left = restrict_to_side(e1_square(), SideRestriction::left_of(1));
  auto res = pts_class(e1, left, SideRestriction::left_of(1));
  ASSERT_TRUE(res.is_class());
  EXPECT_EQ(*res.cls, PtsClass::UU1C);
  EXPECT_STREQ(to_label(*res.cls), "UU1C");
}

TEST(PtsClass, DoubledTopRailIsEvenZeroOneComponent) {
  auto w = WarehouseInstance::create({10, 10}, {{}, {5}}, {2}, {2}, {1, 0});
  TourSubgraph t;
  t.set(top_rail(0), 2);
  auto res = pts_class(w, t, SideRestriction::left_of(1));
  ASSERT_TRUE(res.is_class());
  EXPECT_EQ(*res.cls, PtsClass::EZ1C);
  EXPECT_STREQ(to_label(*res.cls), "E01C");
}

TEST(PtsClass, FinishedTourAwayFromBoundaryIsClosedClass) {
  auto e1 = test_util::make_e1();
  TourSubgraph t;  // doubled stub down to the deepest pick of aisle 1
  t.set(aisle_edge(0, 0), 2);
  t.set(aisle_edge(0, 1), 2);
  auto res = pts_class(e1, t, SideRestriction::left_of(1));
  ASSERT_TRUE(res.is_class());
  EXPECT_EQ(*res.cls, PtsClass::ZZ1C);
}

TEST(PtsClass, EdgeOutsideSideThrows) {
  auto e1 = test_util::make_e1();
  TourSubgraph t;
  t.set(aisle_edge(1, 0), 1);
  EXPECT_THROW(pts_class(e1, t, SideRestriction::left_of(1)),
               InvalidRestrictionError);
  TourSubgraph r;
  r.set(aisle_edge(0, 0), 1);
  EXPECT_THROW(pts_class(e1, r, SideRestriction::right_of(0)),
               InvalidRestrictionError);
}

TEST(PtsClass, ReportsUncoveredSidePick) {
  auto e1 = test_util::make_e1();
  TourSubgraph t;
  t.set(aisle_edge(0, 0), 2);  // reaches the pick at 3 but not the one at 7
  auto res = pts_class(e1, t, SideRestriction::left_of(1));
  ASSERT_FALSE(res.is_class());
  EXPECT_EQ(e1.vertex_name(res.witness_vertex), "p1.2");
}

TEST(PtsClass, ReportsOddInteriorVertex) {
  auto e1 = test_util::make_e1();
  TourSubgraph t;
  t.set(aisle_edge(0, 0), 2);
  t.set(aisle_edge(0, 1), 1);
  t.set(aisle_edge(0, 2), 1);
  auto res = pts_class(e1, t, SideRestriction::left_of(1));
  ASSERT_FALSE(res.is_class());
  EXPECT_EQ(e1.vertex_name(res.witness_vertex), "p1.1");
}

TEST(PtsClass, ReportsStrandedComponentNextToCornerComponent) {
  auto w = WarehouseInstance::create({10, 10}, {{3, 7}, {}}, {2}, {2}, {0, 0});
  TourSubgraph t;
  t.set(aisle_edge(0, 1), 2);  // island between the two picks
  t.set(top_rail(0), 2);       // plus a component on the boundary corner
  auto res = pts_class(w, t, SideRestriction::left_of(1));
  ASSERT_FALSE(res.is_class());
}

TEST(PtsClass, PrefixOfAValidTourAlwaysClassifies) {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    auto w = test_util::suite_instance(seed);
    auto res = solve(w, true);
    ASSERT_TRUE(res.feasible);
    for (int j = 0; j < w.aisle_count(); ++j) {
      auto side = SideRestriction::left_of(j);
      auto cls = pts_class(w, restrict_to_side(res.tour, side), side);
      EXPECT_TRUE(cls.is_class()) << "seed " << seed << " column " << j;
    }
    for (int j = 0; j + 1 < w.aisle_count(); ++j) {
      auto side = SideRestriction::right_of(j);
      auto cls = pts_class(w, restrict_to_side(res.tour, side), side);
      EXPECT_TRUE(cls.is_class()) << "seed " << seed << " column " << j;
    }
  }
}

TEST(ValidTours, AllDegreesEven) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto w = test_util::suite_instance(seed);
    auto res = solve(w, true);
    ASSERT_TRUE(res.feasible);
    auto deg = vertex_degrees(w, res.tour);
    for (int v = 0; v < w.vertex_count(); ++v) EXPECT_EQ(deg[v] % 2, 0);
  }
}

TEST(Mirrors, AreInvolutionsAndPreserveValidity) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    auto w = test_util::suite_instance(seed);
    auto res = solve(w, true);
    ASSERT_TRUE(res.feasible);

    auto wl = mirror_left_right(w);
    auto tl = mirror_left_right(w, res.tour);
    EXPECT_TRUE(validate_tour(wl, tl).ok());
    EXPECT_EQ(mirror_left_right(wl), w);
    EXPECT_EQ(mirror_left_right(wl, tl), res.tour);
    EXPECT_EQ(tour_length(wl, tl), res.length);

    auto wt = mirror_top_bottom(w);
    auto tt = mirror_top_bottom(w, res.tour);
    EXPECT_TRUE(validate_tour(wt, tt).ok());
    EXPECT_EQ(mirror_top_bottom(wt), w);
    EXPECT_EQ(mirror_top_bottom(wt, tt), res.tour);
    EXPECT_EQ(tour_length(wt, tt), res.length);
  }
}

TEST(VertexNames, FollowTheFileConvention) {
  auto e1 = test_util::make_e1();
  EXPECT_EQ(e1.vertex_name(e1.top_corner_id(0)), "a1");
  EXPECT_EQ(e1.vertex_name(e1.bottom_corner_id(1)), "b2");
  EXPECT_EQ(e1.vertex_name(e1.station_vertex_id(0, 1)), "p1.2");

  auto w = WarehouseInstance::create({10}, {{3}}, {}, {}, {0, 7});
  EXPECT_EQ(w.vertex_name(w.depot_vertex_id()), "depot");
}

}  // namespace
