#pragma once

// Left-to-right dynamic program over the seven boundary classes, producing a
// minimum-length tour subgraph, optionally with full-aisle doubles forbidden.

#include <array>
#include <limits>
#include <optional>
#include <vector>

#include "aisle_router/configs.hpp"
#include "aisle_router/model.hpp"

namespace aisle_router {

namespace detail {

enum class Parity : std::uint8_t { Zero, Odd, EvenNonzero };

inline Parity parity_add(Parity p, int delta) {
  bool odd = (p == Parity::Odd) != (delta % 2 != 0);
  bool zero = (p == Parity::Zero) && delta == 0;
  if (zero) return Parity::Zero;
  return odd ? Parity::Odd : Parity::EvenNonzero;
}

/// Component structure at the frontier: which boundary corners are attached
/// and whether they share a component. Closed is a finished component that
/// no longer touches the boundary.
enum class Comp : std::uint8_t { None, OneBoth, OneA, OneB, Two, Closed };

struct Frontier {
  Parity pa = Parity::Zero;
  Parity pb = Parity::Zero;
  Comp comp = Comp::None;
};

inline Frontier frontier_of(PtsClass c) {
  using P = Parity;
  switch (c) {
    case PtsClass::UU1C: return {P::Odd, P::Odd, Comp::OneBoth};
    case PtsClass::EE1C: return {P::EvenNonzero, P::EvenNonzero, Comp::OneBoth};
    case PtsClass::ZE1C: return {P::Zero, P::EvenNonzero, Comp::OneB};
    case PtsClass::EZ1C: return {P::EvenNonzero, P::Zero, Comp::OneA};
    case PtsClass::EE2C: return {P::EvenNonzero, P::EvenNonzero, Comp::Two};
    case PtsClass::ZZ1C: return {P::Zero, P::Zero, Comp::Closed};
    case PtsClass::ZZZC: return {P::Zero, P::Zero, Comp::None};
  }
  return {P::Zero, P::Zero, Comp::None};
}

inline std::optional<PtsClass> encode_frontier(const Frontier& f) {
  using P = Parity;
  switch (f.comp) {
    case Comp::None:
      if (f.pa == P::Zero && f.pb == P::Zero) return PtsClass::ZZZC;
      return std::nullopt;
    case Comp::Closed:
      if (f.pa == P::Zero && f.pb == P::Zero) return PtsClass::ZZ1C;
      return std::nullopt;
    case Comp::OneBoth:
      if (f.pa == P::Odd && f.pb == P::Odd) return PtsClass::UU1C;
      if (f.pa == P::EvenNonzero && f.pb == P::EvenNonzero) return PtsClass::EE1C;
      return std::nullopt;
    case Comp::OneA:
      if (f.pa == P::EvenNonzero && f.pb == P::Zero) return PtsClass::EZ1C;
      return std::nullopt;
    case Comp::OneB:
      if (f.pa == P::Zero && f.pb == P::EvenNonzero) return PtsClass::ZE1C;
      return std::nullopt;
    case Comp::Two:
      if (f.pa == P::EvenNonzero && f.pb == P::EvenNonzero) return PtsClass::EE2C;
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

inline constexpr std::array<PtsClass, 7> kAllClasses = {
    PtsClass::UU1C, PtsClass::EE1C, PtsClass::ZE1C, PtsClass::EZ1C,
    PtsClass::EE2C, PtsClass::ZZ1C, PtsClass::ZZZC};

/// Boundary class after adding one aisle configuration at the current column.
/// Infeasible when an occupied aisle gets no edges or when the frontier holds
/// a finished closed component that new edges could never rejoin.
inline std::optional<PtsClass> apply_vertical(PtsClass state, VerticalKind kind,
                                              bool aisle_occupied) {
  using detail::Comp;
  detail::Frontier f = detail::frontier_of(state);
  if (kind == VerticalKind::NoEdges) {
    if (aisle_occupied) return std::nullopt;
    return state;
  }
  if (f.comp == Comp::Closed) return std::nullopt;

  auto delta = vertical_corner_delta(kind);
  detail::Frontier g;
  g.pa = detail::parity_add(f.pa, delta[0]);
  g.pb = detail::parity_add(f.pb, delta[1]);
  switch (kind) {
    case VerticalKind::SinglePass:
    case VerticalKind::FullDouble:
      g.comp = Comp::OneBoth;
      break;
    case VerticalKind::TopUTurn:
      switch (f.comp) {
        case Comp::None: g.comp = Comp::OneA; break;
        case Comp::OneA: g.comp = Comp::OneA; break;
        case Comp::OneB: g.comp = Comp::Two; break;
        case Comp::OneBoth: g.comp = Comp::OneBoth; break;
        case Comp::Two: g.comp = Comp::Two; break;
        default: return std::nullopt;
      }
      break;
    case VerticalKind::BottomUTurn:
      switch (f.comp) {
        case Comp::None: g.comp = Comp::OneB; break;
        case Comp::OneA: g.comp = Comp::Two; break;
        case Comp::OneB: g.comp = Comp::OneB; break;
        case Comp::OneBoth: g.comp = Comp::OneBoth; break;
        case Comp::Two: g.comp = Comp::Two; break;
        default: return std::nullopt;
      }
      break;
    case VerticalKind::LargestGap:
      switch (f.comp) {
        case Comp::None: g.comp = Comp::Two; break;
        case Comp::OneA: g.comp = Comp::Two; break;
        case Comp::OneB: g.comp = Comp::Two; break;
        case Comp::OneBoth: g.comp = Comp::OneBoth; break;
        case Comp::Two: g.comp = Comp::Two; break;
        default: return std::nullopt;
      }
      break;
    default:
      return std::nullopt;
  }
  return detail::encode_frontier(g);
}

/// Boundary class after spending (top_count, bottom_count) rail edges between
/// the current column and the next. Finalizes the current corners: their
/// degrees must end even, required (depot) corners must end nonzero, and any
/// component left attached to neither new corner must be the unique finished
/// tour, which is only allowed when nothing remains to the right.
inline std::optional<PtsClass> apply_cross(PtsClass state, int top_count,
                                           int bottom_count,
                                           bool targets_remain_right,
                                           bool require_a = false,
                                           bool require_b = false) {
  using detail::Comp;
  using detail::Parity;
  detail::Frontier f = detail::frontier_of(state);
  Parity fa = detail::parity_add(f.pa, top_count);
  Parity fb = detail::parity_add(f.pb, bottom_count);
  if (fa == Parity::Odd || fb == Parity::Odd) return std::nullopt;
  if (require_a && fa != Parity::EvenNonzero) return std::nullopt;
  if (require_b && fb != Parity::EvenNonzero) return std::nullopt;

  const bool link_a = top_count > 0;
  const bool link_b = bottom_count > 0;
  detail::Frontier g;
  g.pa = top_count == 0 ? Parity::Zero
                        : (top_count % 2 == 1 ? Parity::Odd : Parity::EvenNonzero);
  g.pb = bottom_count == 0
             ? Parity::Zero
             : (bottom_count % 2 == 1 ? Parity::Odd : Parity::EvenNonzero);

  switch (f.comp) {
    case Comp::None:
      if (link_a && link_b) g.comp = Comp::Two;
      else if (link_a) g.comp = Comp::OneA;
      else if (link_b) g.comp = Comp::OneB;
      else g.comp = Comp::None;
      break;
    case Comp::OneBoth:
      if (link_a && link_b) g.comp = Comp::OneBoth;
      else if (link_a) g.comp = Comp::OneA;
      else if (link_b) g.comp = Comp::OneB;
      else {
        if (targets_remain_right) return std::nullopt;
        g.comp = Comp::Closed;
      }
      break;
    case Comp::OneA:
      if (link_a && link_b) g.comp = Comp::Two;
      else if (link_a) g.comp = Comp::OneA;
      else if (link_b) return std::nullopt;  // old component stranded for good
      else {
        if (targets_remain_right) return std::nullopt;
        g.comp = Comp::Closed;
      }
      break;
    case Comp::OneB:
      if (link_a && link_b) g.comp = Comp::Two;
      else if (link_b) g.comp = Comp::OneB;
      else if (link_a) return std::nullopt;
      else {
        if (targets_remain_right) return std::nullopt;
        g.comp = Comp::Closed;
      }
      break;
    case Comp::Two:
      if (link_a && link_b) g.comp = Comp::Two;
      else return std::nullopt;  // one of the two components gets stranded
      break;
    case Comp::Closed:
      if (link_a || link_b) return std::nullopt;
      g.comp = Comp::Closed;
      break;
  }
  return detail::encode_frontier(g);
}

/// Classes a finished sweep may end in. The far corners can legitimately have
/// degree zero; a required (depot) corner must not.
inline bool accepting_class(PtsClass c, bool require_a, bool require_b) {
  switch (c) {
    case PtsClass::EE1C:
      return true;
    case PtsClass::EZ1C:
      return !require_b;
    case PtsClass::ZE1C:
      return !require_a;
    case PtsClass::ZZ1C:
      return !require_a && !require_b;
    default:
      return false;
  }
}

struct DpStats {
  int stages = 0;
  int max_states_per_stage = 0;
  std::int64_t total_relaxations = 0;
};

struct SolveResult {
  bool feasible = false;
  TourSubgraph tour;
  Length length = 0;
  DpStats stats;
};

namespace detail {

constexpr Length kInf = std::numeric_limits<Length>::max() / 4;

struct DpEntry {
  Length cost = kInf;
  std::uint8_t pred = 0;    // class index at the previous stage
  std::uint8_t choice = 0;  // VerticalKind or cross pair index
};

using DpStage = std::array<DpEntry, 7>;

/// Cheap per-column cost lookup used by the sweep; edge maps are only
/// materialized for the reconstructed choices.
struct VerticalMenu {
  std::array<Length, 6> cost;  // kInf when the kind is not available
};

inline VerticalMenu vertical_menu(const WarehouseInstance& w, int j,
                                  bool allow_full_double) {
  VerticalMenu m;
  m.cost.fill(kInf);
  for (VerticalKind kind : kVerticalKinds) {
    if (!allow_full_double && kind == VerticalKind::FullDouble) continue;
    auto c = vertical_cost(w, j, kind);
    if (c) m.cost[static_cast<int>(kind)] = *c;
  }
  return m;
}

}  // namespace detail

/// Minimum-length tour subgraph via a single sweep over all columns. With
/// allow_full_double=false the FullDouble configuration is never offered.
inline SolveResult solve(const WarehouseInstance& w, bool allow_full_double) {
  using detail::DpEntry;
  using detail::DpStage;
  using detail::kInf;

  const int n = w.aisle_count();
  SolveResult result;

  // targets_remain[j]: any pick or the depot strictly right of column j.
  std::vector<bool> targets_remain(n + 1, false);
  {
    bool any = false;
    for (int j = n - 1; j >= 0; --j) {
      targets_remain[j + 1] = any;
      bool here = w.aisle_occupied(j) ||
                  (w.depot_at_corner() && w.depot().aisle == j);
      any = any || here;
    }
    targets_remain[0] = any;  // unused; kept for shape
  }
  const bool depot_corner = w.depot_at_corner();
  const int depot_col = w.depot().aisle;
  const bool depot_top = depot_corner && w.depot().offset == 0;

  // Stages: after-vertical at column j is stage 2j, after-cross is 2j+1.
  std::vector<DpStage> stages(2 * n - 1);
  DpStage start;
  start[static_cast<int>(PtsClass::ZZZC)].cost = 0;

  DpStats stats;
  stats.stages = static_cast<int>(stages.size());

  const DpStage* prev = &start;
  for (int j = 0; j < n; ++j) {
    // vertical step
    DpStage& cur = stages[2 * j];
    auto menu = detail::vertical_menu(w, j, allow_full_double);
    const bool occupied = w.aisle_occupied(j);
    for (VerticalKind kind : kVerticalKinds) {
      Length cfg_cost = menu.cost[static_cast<int>(kind)];
      if (cfg_cost >= kInf) continue;
      for (PtsClass src : kAllClasses) {
        const DpEntry& e = (*prev)[static_cast<int>(src)];
        if (e.cost >= kInf) continue;
        auto dst = apply_vertical(src, kind, occupied);
        if (!dst) continue;
        ++stats.total_relaxations;
        DpEntry& slot = cur[static_cast<int>(*dst)];
        if (e.cost + cfg_cost < slot.cost) {
          slot.cost = e.cost + cfg_cost;
          slot.pred = static_cast<std::uint8_t>(src);
          slot.choice = static_cast<std::uint8_t>(kind);
        }
      }
    }
    prev = &cur;
    if (j == n - 1) break;

    // cross step
    DpStage& nxt = stages[2 * j + 1];
    const bool req_a = depot_corner && depot_col == j && depot_top;
    const bool req_b = depot_corner && depot_col == j && !depot_top;
    const Length ct = w.top_segments()[j];
    const Length cb = w.bottom_segments()[j];
    for (int p = 0; p < static_cast<int>(kCrossPairs.size()); ++p) {
      auto [tc, bc] = kCrossPairs[p];
      Length cfg_cost = tc * ct + bc * cb;
      for (PtsClass src : kAllClasses) {
        const DpEntry& e = cur[static_cast<int>(src)];
        if (e.cost >= kInf) continue;
        auto dst = apply_cross(src, tc, bc, targets_remain[j + 1], req_a, req_b);
        if (!dst) continue;
        ++stats.total_relaxations;
        DpEntry& slot = nxt[static_cast<int>(*dst)];
        if (e.cost + cfg_cost < slot.cost) {
          slot.cost = e.cost + cfg_cost;
          slot.pred = static_cast<std::uint8_t>(src);
          slot.choice = static_cast<std::uint8_t>(p);
        }
      }
    }
    prev = &nxt;
  }

  for (const DpStage& st : stages) {
    int reachable = 0;
    for (const DpEntry& e : st)
      if (e.cost < kInf) ++reachable;
    stats.max_states_per_stage = std::max(stats.max_states_per_stage, reachable);
  }
  result.stats = stats;

  // acceptance at the last column
  const bool req_a_last = depot_corner && depot_col == n - 1 && depot_top;
  const bool req_b_last = depot_corner && depot_col == n - 1 && !depot_top;
  const DpStage& last = stages[2 * (n - 1)];
  std::optional<PtsClass> best_class;
  Length best_cost = kInf;
  for (PtsClass c :
       {PtsClass::EE1C, PtsClass::EZ1C, PtsClass::ZE1C, PtsClass::ZZ1C}) {
    if (!accepting_class(c, req_a_last, req_b_last)) continue;
    const DpEntry& e = last[static_cast<int>(c)];
    if (e.cost < best_cost) {
      best_cost = e.cost;
      best_class = c;
    }
  }

  if (best_class) {
    // walk predecessor records back to the start
    std::vector<VerticalKind> kinds(n);
    std::vector<int> pairs(n - 1 >= 0 ? n - 1 : 0);
    int cls = static_cast<int>(*best_class);
    for (int stage = 2 * (n - 1); stage >= 0; --stage) {
      const DpEntry& e = stages[stage][cls];
      if (stage % 2 == 0)
        kinds[stage / 2] = static_cast<VerticalKind>(e.choice);
      else
        pairs[stage / 2] = e.choice;
      cls = e.pred;
    }
    TourSubgraph tour;
    for (int j = 0; j < n; ++j) {
      for (auto& [e, m] : detail::realize_vertical(w, j, kinds[j])) tour.add(e, m);
      if (j < n - 1) {
        auto [tc, bc] = kCrossPairs[pairs[j]];
        if (tc > 0) tour.add(top_rail(j), tc);
        if (bc > 0) tour.add(bottom_rail(j), bc);
      }
    }
    result.feasible = true;
    result.tour = std::move(tour);
    result.length = best_cost;
  }

  // When every target sits strictly inside one aisle, the doubled path
  // between the two extreme targets is a candidate no column sweep can
  // express (it touches no corner).
  if (!depot_corner) {
    const int dj = w.depot().aisle;
    bool single = true;
    for (int j = 0; j < n && single; ++j)
      if (j != dj && w.aisle_occupied(j)) single = false;
    if (single) {
      const auto& sts = w.stations(dj);
      Length lo = sts.front().offset, hi = sts.back().offset;
      if (hi > lo) {
        TourSubgraph path;
        for (int s = 0; s < w.segment_count(dj); ++s) {
          if (w.segment_top_offset(dj, s) >= lo &&
              w.segment_bottom_offset(dj, s) <= hi)
            path.set(aisle_edge(dj, s), 2);
        }
        Length len = 2 * (hi - lo);
        if (!result.feasible || len < result.length) {
          result.feasible = true;
          result.tour = std::move(path);
          result.length = len;
        }
      }
    }
  }

  return result;
}

}  // namespace aisle_router
