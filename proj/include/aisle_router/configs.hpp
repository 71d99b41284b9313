#pragma once

// Edge-configuration catalogue for one aisle and for one pair of cross-aisle
// segments, with exact costs and boundary effects.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "aisle_router/model.hpp"

namespace aisle_router {

/// The six ways a tour can use one aisle. U-turns are doubled partial paths
/// anchored at a corner; LargestGap is two doubled paths split at a maximal
/// interior gap; FullDouble doubles the whole aisle.
enum class VerticalKind : std::uint8_t {
  SinglePass = 0,
  TopUTurn = 1,
  BottomUTurn = 2,
  LargestGap = 3,
  FullDouble = 4,
  NoEdges = 5,
};

inline const char* to_label(VerticalKind k) {
  switch (k) {
    case VerticalKind::SinglePass: return "single_pass";
    case VerticalKind::TopUTurn: return "top_u_turn";
    case VerticalKind::BottomUTurn: return "bottom_u_turn";
    case VerticalKind::LargestGap: return "largest_gap";
    case VerticalKind::FullDouble: return "full_double";
    case VerticalKind::NoEdges: return "no_edges";
  }
  return "?";
}

struct VerticalConfiguration {
  VerticalKind kind;
  Length cost = 0;
  std::array<int, 2> corner_degree_delta = {0, 0};  // at (a_j, b_j)
  bool connects_boundary = false;  // a_j and b_j end up in one within-aisle piece
  std::vector<std::pair<Edge, std::int64_t>> edges;
};

namespace detail {

/// Index of the segment splitting the aisle at its widest station-to-station
/// gap; ties break toward the top. Needs at least two stations.
inline int largest_interior_gap_segment(const WarehouseInstance& w, int j) {
  const auto& sts = w.stations(j);
  int best = 1;
  Length best_gap = -1;
  for (int s = 1; s < static_cast<int>(sts.size()); ++s) {
    Length gap = sts[s].offset - sts[s - 1].offset;
    if (gap > best_gap) {
      best_gap = gap;
      best = s;
    }
  }
  return best;
}

inline std::optional<Length> vertical_cost(const WarehouseInstance& w, int j,
                                           VerticalKind kind) {
  const auto& sts = w.stations(j);
  const Length d = w.aisle_length(j);
  switch (kind) {
    case VerticalKind::SinglePass:
      return d;
    case VerticalKind::TopUTurn:
      if (sts.empty()) return std::nullopt;
      return 2 * sts.back().offset;
    case VerticalKind::BottomUTurn:
      if (sts.empty()) return std::nullopt;
      return 2 * (d - sts.front().offset);
    case VerticalKind::LargestGap: {
      if (sts.size() < 2) return std::nullopt;
      int s = largest_interior_gap_segment(w, j);
      return 2 * (d - (sts[s].offset - sts[s - 1].offset));
    }
    case VerticalKind::FullDouble:
      return 2 * d;
    case VerticalKind::NoEdges:
      if (!sts.empty()) return std::nullopt;
      return 0;
  }
  return std::nullopt;
}

inline std::vector<std::pair<Edge, std::int64_t>> realize_vertical(
    const WarehouseInstance& w, int j, VerticalKind kind) {
  const int segs = w.segment_count(j);
  const int k = segs - 1;  // station count
  std::vector<std::pair<Edge, std::int64_t>> edges;
  switch (kind) {
    case VerticalKind::SinglePass:
      for (int s = 0; s < segs; ++s) edges.emplace_back(aisle_edge(j, s), 1);
      break;
    case VerticalKind::TopUTurn:
      for (int s = 0; s < k; ++s) edges.emplace_back(aisle_edge(j, s), 2);
      break;
    case VerticalKind::BottomUTurn:
      for (int s = 1; s < segs; ++s) edges.emplace_back(aisle_edge(j, s), 2);
      break;
    case VerticalKind::LargestGap: {
      int cut = largest_interior_gap_segment(w, j);
      for (int s = 0; s < segs; ++s)
        if (s != cut) edges.emplace_back(aisle_edge(j, s), 2);
      break;
    }
    case VerticalKind::FullDouble:
      for (int s = 0; s < segs; ++s) edges.emplace_back(aisle_edge(j, s), 2);
      break;
    case VerticalKind::NoEdges:
      break;
  }
  return edges;
}

}  // namespace detail

inline constexpr std::array<VerticalKind, 6> kVerticalKinds = {
    VerticalKind::SinglePass, VerticalKind::TopUTurn,  VerticalKind::BottomUTurn,
    VerticalKind::LargestGap, VerticalKind::FullDouble, VerticalKind::NoEdges};

/// Degree added at (a_j, b_j) by each kind.
inline std::array<int, 2> vertical_corner_delta(VerticalKind kind) {
  switch (kind) {
    case VerticalKind::SinglePass: return {1, 1};
    case VerticalKind::TopUTurn: return {2, 0};
    case VerticalKind::BottomUTurn: return {0, 2};
    case VerticalKind::LargestGap: return {2, 2};
    case VerticalKind::FullDouble: return {2, 2};
    case VerticalKind::NoEdges: return {0, 0};
  }
  return {0, 0};
}

inline bool vertical_connects_boundary(VerticalKind kind) {
  return kind == VerticalKind::SinglePass || kind == VerticalKind::FullDouble;
}

/// The feasible subset of the six kinds for aisle j, in catalogue order.
/// Every listed configuration covers all of the aisle's stations.
inline std::vector<VerticalConfiguration> enumerate_vertical(
    const WarehouseInstance& w, int j) {
  std::vector<VerticalConfiguration> out;
  for (VerticalKind kind : kVerticalKinds) {
    auto cost = detail::vertical_cost(w, j, kind);
    if (!cost) continue;
    VerticalConfiguration cfg;
    cfg.kind = kind;
    cfg.cost = *cost;
    cfg.corner_degree_delta = vertical_corner_delta(kind);
    cfg.connects_boundary = vertical_connects_boundary(kind);
    cfg.edges = detail::realize_vertical(w, j, kind);
    out.push_back(std::move(cfg));
  }
  return out;
}

/// Cross-aisle usage between columns j and j+1 as (top count, bottom count).
/// Odd counts only appear paired: once the sweep passes a column its corners
/// gain no more edges, so a lone odd rail count would strand an odd corner.
struct CrossConfiguration {
  int top_count = 0;
  int bottom_count = 0;
  Length cost = 0;
  std::vector<std::pair<Edge, std::int64_t>> edges;
};

inline constexpr std::array<std::pair<int, int>, 5> kCrossPairs = {
    std::pair<int, int>{0, 0}, {1, 1}, {2, 0}, {0, 2}, {2, 2}};

inline std::vector<CrossConfiguration> enumerate_cross(const WarehouseInstance& w,
                                                       int j) {
  if (j < 0 || j >= w.aisle_count() - 1)
    throw ContractError("cross index out of range");
  std::vector<CrossConfiguration> out;
  for (auto [t, b] : kCrossPairs) {
    CrossConfiguration cfg;
    cfg.top_count = t;
    cfg.bottom_count = b;
    cfg.cost = t * w.top_segments()[j] + b * w.bottom_segments()[j];
    if (t > 0) cfg.edges.emplace_back(top_rail(j), t);
    if (b > 0) cfg.edges.emplace_back(bottom_rail(j), b);
    out.push_back(std::move(cfg));
  }
  return out;
}

}  // namespace aisle_router
