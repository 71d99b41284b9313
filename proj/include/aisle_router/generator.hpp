#pragma once

// Seeded random instance generation. Deterministic for a given seed,
// independent of standard-library distribution implementations.

#include <random>
#include <vector>

#include "aisle_router/model.hpp"

namespace aisle_router {

struct GenParams {
  std::uint64_t seed = 0;
  int aisles = 3;
  int picks = 4;
  bool rectangular = false;
  Length max_len = 10;
};

namespace detail {

class GenRng {
 public:
  explicit GenRng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  Length between(Length lo, Length hi) {
    return lo + static_cast<Length>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace detail

inline WarehouseInstance generate_instance(const GenParams& p) {
  if (p.aisles < 1) throw InvalidInstanceError("need at least one aisle");
  if (p.picks < 0) throw InvalidInstanceError("pick count cannot be negative");
  if (p.max_len < 1) throw InvalidInstanceError("max length must be >= 1");
  // every pick needs a strictly interior slot
  if (p.picks > 0 && (p.max_len < 2 ||
                      static_cast<std::int64_t>(p.aisles) * (p.max_len - 1) < p.picks))
    throw InvalidInstanceError("bounds leave no room for the requested picks");

  detail::GenRng rng(p.seed);
  const int n = p.aisles;
  const Length min_len = p.picks > 0 ? 2 : 1;

  std::vector<Length> lengths(n);
  for (int attempt = 0;; ++attempt) {
    std::int64_t capacity = 0;
    if (p.rectangular) {
      Length d = rng.between(min_len, std::max(min_len, p.max_len));
      for (int j = 0; j < n; ++j) lengths[j] = d;
      capacity = static_cast<std::int64_t>(n) * (d - 1);
    } else {
      for (int j = 0; j < n; ++j) {
        lengths[j] = rng.between(1, p.max_len);
        capacity += lengths[j] - 1;
      }
    }
    if (capacity >= p.picks) break;
    if (attempt > 10000)
      throw InvalidInstanceError("bounds leave no room for the requested picks");
  }

  std::vector<Length> top(n - 1), bottom(n - 1);
  for (int k = 0; k < n - 1; ++k) {
    top[k] = rng.between(1, p.max_len);
    bottom[k] = p.rectangular ? top[k] : rng.between(1, p.max_len);
  }

  std::vector<std::vector<bool>> used(n);
  for (int j = 0; j < n; ++j) used[j].assign(lengths[j] + 1, false);
  std::vector<std::vector<Length>> picks(n);
  for (int placed = 0; placed < p.picks; ++placed) {
    int j = -1;
    for (int tries = 0; tries < 64 && j < 0; ++tries) {
      int cand = static_cast<int>(rng.below(n));
      Length free = lengths[cand] - 1 - static_cast<Length>(picks[cand].size());
      if (free > 0) j = cand;
    }
    if (j < 0) {
      for (int cand = 0; cand < n && j < 0; ++cand)
        if (lengths[cand] - 1 - static_cast<Length>(picks[cand].size()) > 0) j = cand;
    }
    Length off = 0;
    do {
      off = rng.between(1, lengths[j] - 1);
    } while (used[j][off]);
    used[j][off] = true;
    picks[j].push_back(off);
  }
  for (auto& v : picks) std::sort(v.begin(), v.end());

  DepotSpec depot;
  depot.aisle = static_cast<int>(rng.below(n));
  switch (rng.below(4)) {
    case 0: depot.offset = 0; break;
    case 1: depot.offset = lengths[depot.aisle]; break;
    default:
      if (lengths[depot.aisle] < 2)
        depot.offset = 0;
      else
        depot.offset = rng.between(1, lengths[depot.aisle] - 1);
  }

  return WarehouseInstance::create(std::move(lengths), std::move(picks),
                                   std::move(top), std::move(bottom), depot);
}

}  // namespace aisle_router
