#include "aisle_router/configs.hpp"

#include <gtest/gtest.h>

#include <map>

#include "test_util.hpp"

using namespace aisle_router;

namespace {

std::map<VerticalKind, Length> cost_by_kind(const WarehouseInstance& w, int j) {
  std::map<VerticalKind, Length> m;
  for (const auto& cfg : enumerate_vertical(w, j)) m[cfg.kind] = cfg.cost;
  return m;
}

TEST(EnumerateVertical, TwoInteriorVertices) {
  auto w = WarehouseInstance::create({10}, {{3, 7}}, {}, {}, {0, 0});
  auto costs = cost_by_kind(w, 0);
  EXPECT_EQ(costs.at(VerticalKind::SinglePass), 10);
  EXPECT_EQ(costs.at(VerticalKind::TopUTurn), 14);
  EXPECT_EQ(costs.at(VerticalKind::BottomUTurn), 14);
  EXPECT_EQ(costs.at(VerticalKind::LargestGap), 12);  // widest gap is 4
  EXPECT_EQ(costs.at(VerticalKind::FullDouble), 20);
  EXPECT_EQ(costs.count(VerticalKind::NoEdges), 0u);
}

TEST(EnumerateVertical, EmptyAisle) {
  auto w = WarehouseInstance::create({10, 10}, {{}, {5}}, {2}, {2}, {1, 5});
  auto costs = cost_by_kind(w, 0);
  EXPECT_EQ(costs.size(), 3u);
  EXPECT_EQ(costs.at(VerticalKind::SinglePass), 10);
  EXPECT_EQ(costs.at(VerticalKind::FullDouble), 20);
  EXPECT_EQ(costs.at(VerticalKind::NoEdges), 0);
}

TEST(EnumerateVertical, SingleInteriorVertex) {
  auto w = WarehouseInstance::create({10}, {{3}}, {}, {}, {0, 0});
  auto costs = cost_by_kind(w, 0);
  EXPECT_EQ(costs.at(VerticalKind::SinglePass), 10);
  EXPECT_EQ(costs.at(VerticalKind::TopUTurn), 6);
  EXPECT_EQ(costs.at(VerticalKind::BottomUTurn), 14);
  EXPECT_EQ(costs.at(VerticalKind::FullDouble), 20);
  EXPECT_EQ(costs.count(VerticalKind::LargestGap), 0u);
  EXPECT_EQ(costs.count(VerticalKind::NoEdges), 0u);
}

TEST(EnumerateVertical, InteriorDepotCountsAsCoverageTarget) {
  auto w = WarehouseInstance::create({10}, {{}}, {}, {}, {0, 4});
  auto costs = cost_by_kind(w, 0);
  EXPECT_EQ(costs.count(VerticalKind::NoEdges), 0u);
  EXPECT_EQ(costs.at(VerticalKind::TopUTurn), 8);
  EXPECT_EQ(costs.at(VerticalKind::BottomUTurn), 12);
}

TEST(EnumerateVertical, LargestGapTieBreaksTowardTheTop) {
  auto w = WarehouseInstance::create({12}, {{3, 6, 9}}, {}, {}, {0, 0});
  auto cfgs = enumerate_vertical(w, 0);
  const VerticalConfiguration* lg = nullptr;
  for (const auto& c : cfgs)
    if (c.kind == VerticalKind::LargestGap) lg = &c;
  ASSERT_NE(lg, nullptr);
  // both interior gaps are 3; the doubled parts must split between 3 and 6
  EXPECT_EQ(lg->cost, 2 * (12 - 3));
  TourSubgraph t;
  for (auto& [e, m] : lg->edges) t.set(e, m);
  EXPECT_EQ(t.mult(aisle_edge(0, 1)), 0);
  EXPECT_EQ(t.mult(aisle_edge(0, 2)), 2);
}

TEST(EnumerateCross, CostsFollowTheRailLengths) {
  auto w = WarehouseInstance::create({10, 10}, {{5}, {5}}, {2}, {3}, {0, 0});
  auto cfgs = enumerate_cross(w, 0);
  ASSERT_EQ(cfgs.size(), 5u);
  std::map<std::pair<int, int>, Length> costs;
  for (const auto& c : cfgs) costs[{c.top_count, c.bottom_count}] = c.cost;
  EXPECT_EQ(costs.at({0, 0}), 0);
  EXPECT_EQ(costs.at({1, 1}), 5);
  EXPECT_EQ(costs.at({2, 0}), 4);
  EXPECT_EQ(costs.at({0, 2}), 6);
  EXPECT_EQ(costs.at({2, 2}), 10);
}

TEST(EnumerateCross, EqualRails) {
  auto e1 = test_util::make_e1();
  std::map<std::pair<int, int>, Length> costs;
  for (const auto& c : enumerate_cross(e1, 0))
    costs[{c.top_count, c.bottom_count}] = c.cost;
  EXPECT_EQ(costs.at({1, 1}), 4);
  EXPECT_EQ(costs.at({2, 0}), 4);
  EXPECT_EQ(costs.at({0, 2}), 4);
  EXPECT_EQ(costs.at({2, 2}), 8);
  EXPECT_EQ(costs.at({0, 0}), 0);
}

TEST(Configurations, RealizedEdgesMatchDeclaredCostAndDeltas) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    auto w = test_util::suite_instance(seed);
    for (int j = 0; j < w.aisle_count(); ++j) {
      for (const auto& cfg : enumerate_vertical(w, j)) {
        TourSubgraph t;
        for (auto& [e, m] : cfg.edges) t.set(e, m);
        EXPECT_EQ(tour_length(w, t), cfg.cost) << to_label(cfg.kind);
        auto deg = vertex_degrees(w, t);
        EXPECT_EQ(deg[w.top_corner_id(j)], cfg.corner_degree_delta[0]);
        EXPECT_EQ(deg[w.bottom_corner_id(j)], cfg.corner_degree_delta[1]);
        // every station of the aisle is covered
        if (cfg.kind != VerticalKind::NoEdges) {
          for (int s = 0; s < static_cast<int>(w.stations(j).size()); ++s) {
            EXPECT_GT(deg[w.station_vertex_id(j, s)], 0);
          }
        }
      }
      for (int k = 0; k + 1 < w.aisle_count(); ++k) {
        for (const auto& cfg : enumerate_cross(w, k)) {
          TourSubgraph t;
          for (auto& [e, m] : cfg.edges) t.set(e, m);
          EXPECT_EQ(tour_length(w, t), cfg.cost);
        }
      }
    }
  }
}

TEST(Configurations, LargestGapNeverBeatsBothUTurnsCombined) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    auto w = test_util::suite_instance(seed);
    for (int j = 0; j < w.aisle_count(); ++j) {
      auto costs = cost_by_kind(w, j);
      if (!costs.count(VerticalKind::LargestGap)) continue;
      EXPECT_LE(costs.at(VerticalKind::LargestGap),
                costs.at(VerticalKind::TopUTurn) +
                    costs.at(VerticalKind::BottomUTurn));
      EXPECT_LE(costs.at(VerticalKind::LargestGap),
                costs.at(VerticalKind::FullDouble));
    }
  }
}

}  // namespace
