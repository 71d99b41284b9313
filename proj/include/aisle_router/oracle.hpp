#pragma once

// Exhaustive ground-truth solver for desk-scale instances, plus a seeded
// search for non-rectangular instances whose optima all need a full-aisle
// double edge.

#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "aisle_router/model.hpp"

namespace aisle_router {

struct OracleOptions {
  bool enumerate_all = false;
  Length slack = 0;        // with enumerate_all, collect tours within best+slack
  int max_edges = 0;       // 0 = default guard (env override honored)
  bool reverse_order = false;  // enumeration-order invariance testing
};

inline int oracle_default_max_edges() {
  if (const char* env = std::getenv("AISLE_ROUTER_ORACLE_MAX_EDGES")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 18;
}

struct OracleResult {
  bool feasible = false;
  Length length = 0;
  TourSubgraph witness;                // first optimum in enumeration order
  std::vector<TourSubgraph> all_tours; // filled when enumerate_all
};

namespace detail {

struct OracleSearch {
  const WarehouseInstance& w;
  std::vector<Edge> order;
  std::vector<Length> lengths;
  std::vector<std::pair<int, int>> ends;
  // vertices whose incident edges are all assigned once position p is done
  std::vector<std::vector<int>> finalized_after;
  std::vector<bool> is_target;

  std::vector<std::int64_t> mult;
  std::vector<std::int64_t> deg;

  Length limit = 0;
  bool collect = false;
  Length best = 0;
  bool found = false;
  std::vector<TourSubgraph>* sink = nullptr;
  TourSubgraph* witness = nullptr;

  explicit OracleSearch(const WarehouseInstance& inst, bool reverse) : w(inst) {
    const int n = w.aisle_count();
    for (int j = 0; j < n; ++j) {
      for (int s = 0; s < w.segment_count(j); ++s) order.push_back(aisle_edge(j, s));
      if (j < n - 1) {
        order.push_back(top_rail(j));
        order.push_back(bottom_rail(j));
      }
    }
    if (reverse) std::reverse(order.begin(), order.end());
    const int m = static_cast<int>(order.size());
    lengths.resize(m);
    ends.resize(m);
    std::vector<int> last_pos(w.vertex_count(), -1);
    for (int p = 0; p < m; ++p) {
      lengths[p] = edge_length(w, order[p]);
      ends[p] = edge_endpoints(w, order[p]);
      last_pos[ends[p].first] = p;
      last_pos[ends[p].second] = p;
    }
    finalized_after.assign(m, {});
    for (int v = 0; v < w.vertex_count(); ++v)
      if (last_pos[v] >= 0) finalized_after[last_pos[v]].push_back(v);
    is_target.assign(w.vertex_count(), false);
    for (int t : w.target_vertex_ids()) is_target[t] = true;
    mult.assign(m, 0);
    deg.assign(w.vertex_count(), 0);
  }

  void run(int pos, Length len) {
    if (pos == static_cast<int>(order.size())) {
      finish(len);
      return;
    }
    auto [u, v] = ends[pos];
    for (int m = 0; m <= 2; ++m) {
      Length nl = len + m * lengths[pos];
      if (nl > limit) break;
      mult[pos] = m;
      deg[u] += m;
      deg[v] += m;
      bool ok = true;
      for (int fv : finalized_after[pos]) {
        if (deg[fv] % 2 != 0 || (is_target[fv] && deg[fv] == 0)) {
          ok = false;
          break;
        }
      }
      if (ok) run(pos + 1, nl);
      deg[u] -= m;
      deg[v] -= m;
      mult[pos] = 0;
    }
  }

  void finish(Length len) {
    detail::UnionFind uf(w.vertex_count());
    for (int p = 0; p < static_cast<int>(order.size()); ++p)
      if (mult[p] > 0) uf.unite(ends[p].first, ends[p].second);
    int root = -1;
    for (int v = 0; v < w.vertex_count(); ++v) {
      if (deg[v] == 0) continue;
      if (root < 0) root = uf.find(v);
      if (uf.find(v) != root) return;
    }
    // a valid tour; coverage and parity were enforced along the way
    if (!found || len < best) {
      best = len;
      found = true;
    }
    if (collect) {
      TourSubgraph t;
      for (int p = 0; p < static_cast<int>(order.size()); ++p)
        if (mult[p] > 0) t.set(order[p], mult[p]);
      if (witness && !witness_set) {
        *witness = t;
        witness_set = true;
      }
      if (sink) sink->push_back(std::move(t));
    }
  }

  bool witness_set = false;
};

}  // namespace detail

/// Enumerates multiplicity 0/1/2 per edge with parity, coverage and length
/// pruning. Any higher multiplicity reduces by 2 with the same parity and
/// connectivity, so some optimum is always canonical.
inline OracleResult brute_force_optimum(const WarehouseInstance& w,
                                        const OracleOptions& opts) {
  int guard = opts.max_edges > 0 ? opts.max_edges : oracle_default_max_edges();
  int edge_count = 0;
  for (int j = 0; j < w.aisle_count(); ++j) edge_count += w.segment_count(j);
  edge_count += 2 * (w.aisle_count() - 1);
  if (edge_count > guard)
    throw InstanceTooLargeError("instance has " + std::to_string(edge_count) +
                                " edges; oracle guard is " + std::to_string(guard));

  OracleResult result;
  constexpr Length kInf = std::numeric_limits<Length>::max() / 4;

  // pass 1: optimal length only
  detail::OracleSearch pass1(w, opts.reverse_order);
  pass1.limit = kInf;
  pass1.collect = false;
  pass1.run(0, 0);
  if (!pass1.found) return result;

  // pass 2: first witness (and near-optimal tours when asked)
  detail::OracleSearch pass2(w, opts.reverse_order);
  pass2.limit = pass1.best + (opts.enumerate_all ? opts.slack : 0);
  pass2.collect = true;
  pass2.witness = &result.witness;
  std::vector<TourSubgraph> collected;
  pass2.sink = opts.enumerate_all ? &collected : nullptr;
  pass2.run(0, 0);

  result.feasible = true;
  result.length = pass1.best;
  if (opts.enumerate_all) {
    // first pass gave the exact optimum; keep only tours within the slack
    for (auto& t : collected)
      if (tour_length(w, t) <= pass1.best + opts.slack)
        result.all_tours.push_back(std::move(t));
  }
  return result;
}

inline OracleResult brute_force_optimum(const WarehouseInstance& w,
                                        bool enumerate_all = false) {
  OracleOptions opts;
  opts.enumerate_all = enumerate_all;
  return brute_force_optimum(w, opts);
}

// --- counterexample search -------------------------------------------------------

struct CounterexampleBounds {
  Length max_len = 12;
  int max_picks = 2;
  int max_trials = 200000;
};

namespace detail {

/// Deterministic bounded sampling, independent of standard-library
/// distribution implementations.
class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  Length between(Length lo, Length hi) {
    return lo + static_cast<Length>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace detail

/// Seeded sampling over non-rectangular two-aisle instances, returning the
/// first one whose canonical optima all carry a fully doubled aisle.
inline std::optional<WarehouseInstance> find_counterexample(
    const CounterexampleBounds& bounds, std::uint64_t seed) {
  detail::SeededSampler rng(seed);
  for (int trial = 0; trial < bounds.max_trials; ++trial) {
    Length d1 = rng.between(1, bounds.max_len);
    Length d2 = rng.between(1, bounds.max_len);
    Length ct = rng.between(1, bounds.max_len);
    Length cb = rng.between(1, bounds.max_len);
    if (d1 == d2 && ct == cb) continue;  // rectangular

    int npicks = 1 + static_cast<int>(rng.below(
                         static_cast<std::uint64_t>(bounds.max_picks)));
    std::vector<std::vector<Length>> picks(2);
    bool placeable = true;
    for (int p = 0; p < npicks; ++p) {
      int aisle = static_cast<int>(rng.below(2));
      Length d = aisle == 0 ? d1 : d2;
      if (d < 2) {
        placeable = false;
        break;
      }
      Length off = rng.between(1, d - 1);
      picks[aisle].push_back(off);
    }
    if (!placeable) continue;
    for (auto& v : picks) {
      std::sort(v.begin(), v.end());
      if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
        placeable = false;
        break;
      }
    }
    if (!placeable) continue;

    DepotSpec depot;
    depot.aisle = static_cast<int>(rng.below(2));
    Length dlen = depot.aisle == 0 ? d1 : d2;
    switch (rng.below(4)) {
      case 0: depot.offset = 0; break;
      case 1: depot.offset = dlen; break;
      default:
        if (dlen < 2) {
          depot.offset = 0;
        } else {
          depot.offset = rng.between(1, dlen - 1);
        }
    }

    WarehouseInstance inst = WarehouseInstance::create(
        {d1, d2}, std::move(picks), {ct}, {cb}, depot);
    OracleOptions opts;
    opts.enumerate_all = true;
    OracleResult res = brute_force_optimum(inst, opts);
    if (!res.feasible || res.all_tours.empty()) continue;
    bool all_doubled = true;
    for (const auto& t : res.all_tours) {
      if (count_full_aisle_doubles(inst, t) == 0) {
        all_doubled = false;
        break;
      }
    }
    if (all_doubled) return inst;
  }
  return std::nullopt;
}

}  // namespace aisle_router
