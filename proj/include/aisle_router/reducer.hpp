#pragma once

// Rewrites tour subgraphs of rectangular instances to remove full-aisle
// vertical double edges without increasing length.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aisle_router/model.hpp"

namespace aisle_router {

enum class ReductionCase : std::uint8_t {
  Case1 = 1,       // boundary corners already linked through the left part
  Case2 = 2,       // right part links the next column's corners
  Case3 = 3,       // all four block corners even; rewrite to the plain square
  SingleAisle = 4  // tour confined to one aisle; doubled path between extremes
};

inline const char* to_label(ReductionCase c) {
  switch (c) {
    case ReductionCase::Case1: return "1";
    case ReductionCase::Case2: return "2";
    case ReductionCase::Case3: return "3";
    case ReductionCase::SingleAisle: return "single";
  }
  return "?";
}

struct ReductionStep {
  int aisle = 0;  // 0-based column whose full double was eliminated
  ReductionCase kind = ReductionCase::Case1;
  bool mirrored_lr = false;
  bool mirrored_tb = false;
  Length saved = 0;
};

struct ReduceOutcome {
  TourSubgraph tour;
  ReductionStep step;
};

/// Classes of the tour restricted to the two sides of the block (j, j+1).
inline std::pair<PtsClass, PtsClass> classify_sides(const WarehouseInstance& w,
                                                    const TourSubgraph& t, int j) {
  if (j < 0 || j + 1 >= w.aisle_count())
    throw ContractError("block (j, j+1) must lie inside the warehouse");
  if (!validate_tour(w, t).ok()) throw ContractError("tour must be valid");
  if (t.max_multiplicity() > 2) throw ContractError("tour must be canonical");
  if (!has_full_aisle_double(w, t, j))
    throw ContractError("aisle j carries no full double edge");
  auto left = pts_class(w, restrict_to_side(t, SideRestriction::left_of(j)),
                        SideRestriction::left_of(j));
  auto right = pts_class(w, restrict_to_side(t, SideRestriction::right_of(j)),
                         SideRestriction::right_of(j));
  if (!left.is_class() || !right.is_class())
    throw ContractError("side restriction of a valid tour failed to classify");
  return {*left.cls, *right.cls};
}

namespace detail {

/// Widest segment of aisle j (ties toward the top).
inline int widest_segment(const WarehouseInstance& w, int j) {
  int best = 0;
  Length best_len = -1;
  for (int s = 0; s < w.segment_count(j); ++s) {
    if (w.segment_length(j, s) > best_len) {
      best_len = w.segment_length(j, s);
      best = s;
    }
  }
  return best;
}

inline void clear_block_edges(const WarehouseInstance& w, TourSubgraph& t, int j) {
  for (int s = 0; s < w.segment_count(j); ++s) t.set(aisle_edge(j, s), 0);
  for (int s = 0; s < w.segment_count(j + 1); ++s) t.set(aisle_edge(j + 1, s), 0);
  t.set(top_rail(j), 0);
  t.set(bottom_rail(j), 0);
}

struct BlockRewrite {
  TourSubgraph tour;
  ReductionCase kind;
  bool mirrored_tb = false;
};

/// One rewrite attempt inside the block (j, j+1); requires j+1 < n. Fails
/// only when the block carries no rail edges, which for a valid tour means
/// everything right of aisle j is empty.
inline std::optional<BlockRewrite> attempt_block_rewrite(const WarehouseInstance& w,
                                                         const TourSubgraph& t,
                                                         int j) {
  auto [c_left, c_right] = classify_sides(w, t, j);

  if (c_left == PtsClass::UU1C) {
    // Both corners of column j already meet through the left part; dropping
    // one doubled segment keeps everything connected and every parity intact.
    TourSubgraph out = t;
    out.add(aisle_edge(j, widest_segment(w, j)), -2);
    return BlockRewrite{std::move(out), ReductionCase::Case1, false};
  }

  const std::int64_t top_m = t.mult(top_rail(j));
  const std::int64_t bot_m = t.mult(bottom_rail(j));

  if (c_right == PtsClass::UU1C) {
    // Column j's corners are even, column j+1's odd; the block rails can only
    // be doubled or absent, and connectivity forces at least one double.
    if (top_m != 2 && bot_m != 2) return std::nullopt;
    bool tb = top_m != 2;
    WarehouseInstance wi = tb ? mirror_top_bottom(w) : w;
    TourSubgraph wt = tb ? mirror_top_bottom(w, t) : t;
    clear_block_edges(wi, wt, j);
    for (int s = 0; s < wi.segment_count(j); ++s) wt.set(aisle_edge(j, s), 1);
    wt.set(top_rail(j), 1);
    wt.set(bottom_rail(j), 1);
    int cut = widest_segment(wi, j + 1);
    for (int s = 0; s < wi.segment_count(j + 1); ++s)
      if (s != cut) wt.set(aisle_edge(j + 1, s), 2);
    if (tb) wt = mirror_top_bottom(wi, wt);
    return BlockRewrite{std::move(wt), ReductionCase::Case2, tb};
  }

  // Both side classes keep their corners even; with any doubled rail present
  // the single-edge square over the block is never longer.
  if (top_m == 2 || bot_m == 2) {
    bool tb = top_m != 2;
    WarehouseInstance wi = tb ? mirror_top_bottom(w) : w;
    TourSubgraph wt = tb ? mirror_top_bottom(w, t) : t;
    clear_block_edges(wi, wt, j);
    for (int s = 0; s < wi.segment_count(j); ++s) wt.set(aisle_edge(j, s), 1);
    for (int s = 0; s < wi.segment_count(j + 1); ++s) wt.set(aisle_edge(j + 1, s), 1);
    wt.set(top_rail(j), 1);
    wt.set(bottom_rail(j), 1);
    if (tb) wt = mirror_top_bottom(wi, wt);
    return BlockRewrite{std::move(wt), ReductionCase::Case3, tb};
  }
  return std::nullopt;
}

/// The whole tour is the doubled aisle j; replace it with the doubled path
/// between the two extreme targets of that aisle.
inline TourSubgraph single_aisle_rewrite(const WarehouseInstance& w, int j) {
  Length lo = w.aisle_length(j), hi = 0;
  for (const Station& st : w.stations(j)) {
    lo = std::min(lo, st.offset);
    hi = std::max(hi, st.offset);
  }
  if (w.depot_at_corner() && w.depot().aisle == j) {
    lo = std::min(lo, w.depot().offset);
    hi = std::max(hi, w.depot().offset);
  }
  if (lo >= hi) {
    if (lo <= 0 || lo >= w.aisle_length(j))
      throw UnsupportedInstanceError(
          "irreducible: the only target is a single boundary corner");
    // one interior target: doubled stub to the nearer corner, top on ties
    if (lo <= w.aisle_length(j) - lo)
      lo = 0;
    else
      hi = w.aisle_length(j);
  }
  TourSubgraph out;
  for (int s = 0; s < w.segment_count(j); ++s)
    if (w.segment_top_offset(j, s) >= lo && w.segment_bottom_offset(j, s) <= hi)
      out.set(aisle_edge(j, s), 2);
  return out;
}

}  // namespace detail

/// One reduction step at aisle j. Only edges inside one two-column block
/// change; the result is a valid tour, at most as long, with strictly fewer
/// fully doubled aisles. Tries the block to the right of j first and the
/// mirrored block when the right one carries no rail edges.
inline ReduceOutcome reduce_once(const WarehouseInstance& w, const TourSubgraph& t,
                                 int j) {
  if (!is_rectangular(w))
    throw UnsupportedInstanceError(
        "full-aisle double elimination needs a rectangular instance");
  if (!validate_tour(w, t).ok()) throw ContractError("tour must be valid");
  if (t.max_multiplicity() > 2) throw ContractError("tour must be canonical");
  if (j < 0 || j >= w.aisle_count()) throw ContractError("aisle index out of range");
  if (!has_full_aisle_double(w, t, j))
    throw ContractError("aisle j carries no full double edge");

  const int n = w.aisle_count();
  const Length before = tour_length(w, t);
  for (bool lr : {false, true}) {
    if (!lr && j >= n - 1) continue;
    if (lr && j == 0) continue;
    WarehouseInstance wi = lr ? mirror_left_right(w) : w;
    TourSubgraph wt = lr ? mirror_left_right(w, t) : t;
    int wj = lr ? n - 1 - j : j;
    auto rewrite = detail::attempt_block_rewrite(wi, wt, wj);
    if (!rewrite) continue;
    TourSubgraph out =
        lr ? mirror_left_right(wi, std::move(rewrite->tour)) : std::move(rewrite->tour);
    ReductionStep step{j, rewrite->kind, lr, rewrite->mirrored_tb,
                       before - tour_length(w, out)};
    return {std::move(out), step};
  }

  // No rail edges on either side of aisle j: the tour is the doubled aisle.
  TourSubgraph out = detail::single_aisle_rewrite(w, j);
  ReductionStep step{j, ReductionCase::SingleAisle, false, false,
                     before - tour_length(w, out)};
  return {std::move(out), step};
}

/// Canonicalizes, then removes full-aisle doubles left to right until none
/// remains. Never increases the length.
inline TourSubgraph eliminate_all(const WarehouseInstance& w, const TourSubgraph& t,
                                  std::vector<ReductionStep>* steps = nullptr) {
  if (!is_rectangular(w))
    throw UnsupportedInstanceError(
        "full-aisle double elimination needs a rectangular instance");
  TourSubgraph cur = canonicalize_multiplicities(t);
  if (!validate_tour(w, cur).ok()) throw ContractError("tour must be valid");
  int remaining = count_full_aisle_doubles(w, cur);
  while (remaining > 0) {
    int j = 0;
    while (!has_full_aisle_double(w, cur, j)) ++j;
    ReduceOutcome outcome = reduce_once(w, cur, j);
    int after = count_full_aisle_doubles(w, outcome.tour);
    if (after >= remaining)
      throw ContractError("reduction failed to remove a full double");
    if (steps) steps->push_back(outcome.step);
    cur = std::move(outcome.tour);
    remaining = after;
  }
  return cur;
}

}  // namespace aisle_router
