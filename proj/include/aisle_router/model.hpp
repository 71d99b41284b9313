#pragma once

// Warehouse graph model: instances, tour subgraphs, validity checks and
// partial-tour-subgraph classification for two-cross-aisle warehouses.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aisle_router {

using Length = std::int64_t;

struct InvalidInstanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidEdgeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidRestrictionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedInstanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InstanceTooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CornerSide : std::uint8_t { Top, Bottom };

/// Interior vertex of an aisle: a pick, the depot, or both at one offset.
struct Station {
  Length offset = 0;             // distance from the top corner, strictly interior
  std::int32_t pick_index = -1;  // index into the aisle's pick list, -1 if depot-only
  bool is_depot = false;
};

struct DepotSpec {
  std::int32_t aisle = 0;  // 0-based
  Length offset = 0;       // 0 = top corner, aisle length = bottom corner
  friend bool operator==(const DepotSpec&, const DepotSpec&) = default;
};

/// Immutable warehouse description: n vertical aisles between two horizontal
/// cross aisles, pick offsets per aisle, and the depot location. Interior
/// vertices ("stations") are resolved and indexed at construction.
class WarehouseInstance {
 public:
  static WarehouseInstance create(std::vector<Length> aisle_lengths,
                                  std::vector<std::vector<Length>> picks,
                                  std::vector<Length> top_segments,
                                  std::vector<Length> bottom_segments,
                                  DepotSpec depot) {
    WarehouseInstance w;
    w.lengths_ = std::move(aisle_lengths);
    w.picks_ = std::move(picks);
    w.top_ = std::move(top_segments);
    w.bottom_ = std::move(bottom_segments);
    w.depot_ = depot;
    w.validate_and_index();
    return w;
  }

  int aisle_count() const { return static_cast<int>(lengths_.size()); }
  Length aisle_length(int j) const { return lengths_.at(j); }
  const std::vector<Length>& aisle_lengths() const { return lengths_; }
  const std::vector<Length>& top_segments() const { return top_; }
  const std::vector<Length>& bottom_segments() const { return bottom_; }
  const std::vector<std::vector<Length>>& picks() const { return picks_; }
  const DepotSpec& depot() const { return depot_; }

  bool depot_at_corner() const {
    return depot_.offset == 0 || depot_.offset == lengths_[depot_.aisle];
  }
  CornerSide depot_corner_side() const {
    return depot_.offset == 0 ? CornerSide::Top : CornerSide::Bottom;
  }

  const std::vector<Station>& stations(int j) const { return stations_.at(j); }
  bool aisle_occupied(int j) const { return !stations_[j].empty(); }
  int segment_count(int j) const { return static_cast<int>(stations_[j].size()) + 1; }

  /// Offset of the upper endpoint of segment i in aisle j (0 for the corner).
  Length segment_top_offset(int j, int i) const {
    return i == 0 ? 0 : stations_[j][i - 1].offset;
  }
  Length segment_bottom_offset(int j, int i) const {
    return i == static_cast<int>(stations_[j].size()) ? lengths_[j]
                                                      : stations_[j][i].offset;
  }
  Length segment_length(int j, int i) const {
    return segment_bottom_offset(j, i) - segment_top_offset(j, i);
  }

  // Flat vertex ids, per aisle: top corner, stations top to bottom, bottom corner.
  int vertex_count() const { return vertex_base_.back(); }
  int top_corner_id(int j) const { return vertex_base_[j]; }
  int station_vertex_id(int j, int s) const { return vertex_base_[j] + 1 + s; }
  int bottom_corner_id(int j) const {
    return vertex_base_[j] + 1 + static_cast<int>(stations_[j].size());
  }
  int corner_id(int j, CornerSide side) const {
    return side == CornerSide::Top ? top_corner_id(j) : bottom_corner_id(j);
  }

  int vertex_aisle(int vertex_id) const {
    auto it = std::upper_bound(vertex_base_.begin(), vertex_base_.end(), vertex_id);
    return static_cast<int>(it - vertex_base_.begin()) - 1;
  }

  int depot_vertex_id() const {
    if (depot_.offset == 0) return top_corner_id(depot_.aisle);
    if (depot_.offset == lengths_[depot_.aisle]) return bottom_corner_id(depot_.aisle);
    return station_vertex_id(depot_.aisle, depot_station_index_);
  }

  /// Picks and the depot; the vertices every tour must touch.
  const std::vector<int>& target_vertex_ids() const { return targets_; }

  std::string vertex_name(int vertex_id) const {
    int j = vertex_aisle(vertex_id);
    int local = vertex_id - vertex_base_[j];
    int k = static_cast<int>(stations_[j].size());
    if (local == 0) return "a" + std::to_string(j + 1);
    if (local == k + 1) return "b" + std::to_string(j + 1);
    const Station& st = stations_[j][local - 1];
    if (st.pick_index >= 0)
      return "p" + std::to_string(j + 1) + "." + std::to_string(st.pick_index + 1);
    return "depot";
  }

  friend bool operator==(const WarehouseInstance& a, const WarehouseInstance& b) {
    return a.lengths_ == b.lengths_ && a.picks_ == b.picks_ && a.top_ == b.top_ &&
           a.bottom_ == b.bottom_ && a.depot_ == b.depot_;
  }

 private:
  void validate_and_index() {
    const int n = static_cast<int>(lengths_.size());
    if (n < 1) throw InvalidInstanceError("instance needs at least one aisle");
    if (static_cast<int>(picks_.size()) != n)
      throw InvalidInstanceError("picks must list one entry per aisle");
    if (static_cast<int>(top_.size()) != n - 1 ||
        static_cast<int>(bottom_.size()) != n - 1)
      throw InvalidInstanceError("cross segments must have aisle_count-1 entries");
    for (Length d : lengths_)
      if (d < 1) throw InvalidInstanceError("aisle lengths must be >= 1");
    for (Length c : top_)
      if (c < 1) throw InvalidInstanceError("top segments must be >= 1");
    for (Length c : bottom_)
      if (c < 1) throw InvalidInstanceError("bottom segments must be >= 1");
    if (depot_.aisle < 0 || depot_.aisle >= n)
      throw InvalidInstanceError("depot aisle out of range");
    if (depot_.offset < 0 || depot_.offset > lengths_[depot_.aisle])
      throw InvalidInstanceError("depot offset out of range");

    stations_.assign(n, {});
    for (int j = 0; j < n; ++j) {
      Length prev = 0;
      for (std::size_t i = 0; i < picks_[j].size(); ++i) {
        Length off = picks_[j][i];
        if (off <= 0 || off >= lengths_[j])
          throw InvalidInstanceError("pick offsets must be strictly interior");
        if (i > 0 && off <= prev)
          throw InvalidInstanceError("pick offsets must be strictly increasing");
        prev = off;
        stations_[j].push_back(Station{off, static_cast<std::int32_t>(i), false});
      }
    }
    depot_station_index_ = -1;
    if (!depot_at_corner()) {
      auto& sts = stations_[depot_.aisle];
      auto it = std::lower_bound(
          sts.begin(), sts.end(), depot_.offset,
          [](const Station& s, Length off) { return s.offset < off; });
      if (it != sts.end() && it->offset == depot_.offset) {
        it->is_depot = true;  // depot shares a pick's position
      } else {
        it = sts.insert(it, Station{depot_.offset, -1, true});
      }
      depot_station_index_ = static_cast<int>(it - sts.begin());
    }

    vertex_base_.assign(n + 1, 0);
    for (int j = 0; j < n; ++j)
      vertex_base_[j + 1] = vertex_base_[j] + 2 + static_cast<int>(stations_[j].size());

    targets_.clear();
    for (int j = 0; j < n; ++j)
      for (int s = 0; s < static_cast<int>(stations_[j].size()); ++s)
        targets_.push_back(station_vertex_id(j, s));
    if (depot_at_corner()) targets_.push_back(depot_vertex_id());
  }

  std::vector<Length> lengths_, top_, bottom_;
  std::vector<std::vector<Length>> picks_;
  DepotSpec depot_;
  std::vector<std::vector<Station>> stations_;
  std::vector<int> vertex_base_;
  std::vector<int> targets_;
  int depot_station_index_ = -1;
};

// --- edges -------------------------------------------------------------------

enum class EdgeKind : std::uint8_t { AisleSegment = 0, TopRail = 1, BottomRail = 2 };

/// Undirected edge of the warehouse graph. Aisle segments connect consecutive
/// vertices within an aisle (seg 0 starts at the top corner); rails connect
/// corner j to corner j+1. Ordering is column-major: all of column j's
/// segments, then the two rails leaving it to the right.
struct Edge {
  std::int32_t aisle = 0;
  EdgeKind kind = EdgeKind::AisleSegment;
  std::int32_t seg = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge aisle_edge(int j, int seg) {
  return Edge{j, EdgeKind::AisleSegment, seg};
}
inline Edge top_rail(int j) { return Edge{j, EdgeKind::TopRail, 0}; }
inline Edge bottom_rail(int j) { return Edge{j, EdgeKind::BottomRail, 0}; }

inline bool edge_in_graph(const WarehouseInstance& w, const Edge& e) {
  const int n = w.aisle_count();
  switch (e.kind) {
    case EdgeKind::AisleSegment:
      return e.aisle >= 0 && e.aisle < n && e.seg >= 0 && e.seg < w.segment_count(e.aisle);
    case EdgeKind::TopRail:
    case EdgeKind::BottomRail:
      return e.aisle >= 0 && e.aisle < n - 1 && e.seg == 0;
  }
  return false;
}

inline Length edge_length(const WarehouseInstance& w, const Edge& e) {
  if (!edge_in_graph(w, e)) throw InvalidEdgeError("edge not in warehouse graph");
  switch (e.kind) {
    case EdgeKind::AisleSegment:
      return w.segment_length(e.aisle, e.seg);
    case EdgeKind::TopRail:
      return w.top_segments()[e.aisle];
    case EdgeKind::BottomRail:
      return w.bottom_segments()[e.aisle];
  }
  return 0;
}

inline std::pair<int, int> edge_endpoints(const WarehouseInstance& w, const Edge& e) {
  if (!edge_in_graph(w, e)) throw InvalidEdgeError("edge not in warehouse graph");
  const int k = static_cast<int>(w.stations(e.aisle).size());
  switch (e.kind) {
    case EdgeKind::AisleSegment: {
      int up = e.seg == 0 ? w.top_corner_id(e.aisle)
                          : w.station_vertex_id(e.aisle, e.seg - 1);
      int down = e.seg == k ? w.bottom_corner_id(e.aisle)
                            : w.station_vertex_id(e.aisle, e.seg);
      return {up, down};
    }
    case EdgeKind::TopRail:
      return {w.top_corner_id(e.aisle), w.top_corner_id(e.aisle + 1)};
    case EdgeKind::BottomRail:
      return {w.bottom_corner_id(e.aisle), w.bottom_corner_id(e.aisle + 1)};
  }
  return {0, 0};
}

/// Edge-to-multiplicity map over the warehouse graph; absent edge means 0.
class TourSubgraph {
 public:
  void set(Edge e, std::int64_t m) {
    if (m < 0) throw ContractError("edge multiplicity cannot be negative");
    if (m == 0)
      mult_.erase(e);
    else
      mult_[e] = m;
  }
  void add(Edge e, std::int64_t delta) {
    auto it = mult_.find(e);
    std::int64_t m = (it == mult_.end() ? 0 : it->second) + delta;
    if (m < 0) throw ContractError("edge multiplicity cannot go negative");
    if (m == 0) {
      if (it != mult_.end()) mult_.erase(it);
    } else if (it != mult_.end()) {
      it->second = m;
    } else {
      mult_.emplace(e, m);
    }
  }
  std::int64_t mult(Edge e) const {
    auto it = mult_.find(e);
    return it == mult_.end() ? 0 : it->second;
  }
  const std::map<Edge, std::int64_t>& edges() const { return mult_; }
  bool empty() const { return mult_.empty(); }
  std::int64_t max_multiplicity() const {
    std::int64_t m = 0;
    for (const auto& [e, c] : mult_) m = std::max(m, c);
    return m;
  }
  friend bool operator==(const TourSubgraph&, const TourSubgraph&) = default;

 private:
  std::map<Edge, std::int64_t> mult_;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

// --- basic operations ----------------------------------------------------------

/// True iff all aisles share one length and each top segment equals the
/// corresponding bottom segment.
inline bool is_rectangular(const WarehouseInstance& w) {
  for (int j = 1; j < w.aisle_count(); ++j)
    if (w.aisle_length(j) != w.aisle_length(0)) return false;
  for (int k = 0; k < w.aisle_count() - 1; ++k)
    if (w.top_segments()[k] != w.bottom_segments()[k]) return false;
  return true;
}

/// Sum of multiplicity times edge length. Throws on edges outside the graph.
inline Length tour_length(const WarehouseInstance& w, const TourSubgraph& t) {
  Length total = 0;
  for (const auto& [e, m] : t.edges()) total += m * edge_length(w, e);
  return total;
}

inline std::vector<std::int64_t> vertex_degrees(const WarehouseInstance& w,
                                                const TourSubgraph& t) {
  std::vector<std::int64_t> deg(w.vertex_count(), 0);
  for (const auto& [e, m] : t.edges()) {
    auto [u, v] = edge_endpoints(w, e);
    deg[u] += m;
    deg[v] += m;
  }
  return deg;
}

struct TourViolation {
  enum class Clause { UncoveredTarget, Disconnected, OddDegree };
  Clause clause;
  int vertex_id = -1;
};

struct ValidationReport {
  std::optional<TourViolation> violation;
  bool ok() const { return !violation.has_value(); }
};

/// A tour subgraph must cover every pick and the depot, be connected over its
/// positive-degree vertices, and have even degree everywhere.
inline ValidationReport validate_tour(const WarehouseInstance& w,
                                      const TourSubgraph& t) {
  auto deg = vertex_degrees(w, t);
  for (int target : w.target_vertex_ids())
    if (deg[target] == 0)
      return {TourViolation{TourViolation::Clause::UncoveredTarget, target}};
  detail::UnionFind uf(w.vertex_count());
  for (const auto& [e, m] : t.edges()) {
    if (m == 0) continue;
    auto [u, v] = edge_endpoints(w, e);
    uf.unite(u, v);
  }
  int root = -1;
  for (int v = 0; v < w.vertex_count(); ++v) {
    if (deg[v] == 0) continue;
    if (root < 0) root = uf.find(v);
    if (uf.find(v) != root)
      return {TourViolation{TourViolation::Clause::Disconnected, v}};
  }
  for (int v = 0; v < w.vertex_count(); ++v)
    if (deg[v] % 2 != 0)
      return {TourViolation{TourViolation::Clause::OddDegree, v}};
  return {};
}

/// True iff every segment of aisle j carries multiplicity >= 2.
inline bool has_full_aisle_double(const WarehouseInstance& w, const TourSubgraph& t,
                                  int j) {
  if (j < 0 || j >= w.aisle_count()) throw ContractError("aisle index out of range");
  for (int s = 0; s < w.segment_count(j); ++s)
    if (t.mult(aisle_edge(j, s)) < 2) return false;
  return true;
}

inline int count_full_aisle_doubles(const WarehouseInstance& w,
                                    const TourSubgraph& t) {
  int c = 0;
  for (int j = 0; j < w.aisle_count(); ++j)
    if (has_full_aisle_double(w, t, j)) ++c;
  return c;
}

/// Reduces every multiplicity above 2 by steps of 2, preserving degree
/// parities and keeping at least one copy of every used edge.
inline TourSubgraph canonicalize_multiplicities(const TourSubgraph& t) {
  TourSubgraph out;
  for (const auto& [e, m] : t.edges()) {
    std::int64_t c = m;
    if (c > 2) c = (c % 2 == 0) ? 2 : 1;
    out.set(e, c);
  }
  return out;
}

// --- partial tour subgraph classification ---------------------------------------

/// The seven boundary signatures a partial tour subgraph can have: degree
/// parity of the two boundary corners (U odd, E even nonzero, 0 zero) and the
/// component structure. ZE/EZ/ZZ spell the labels 0E/E0/00.
enum class PtsClass : std::uint8_t {
  UU1C = 0,
  EE1C = 1,
  ZE1C = 2,  // 0E1C
  EZ1C = 3,  // E01C
  EE2C = 4,
  ZZ1C = 5,  // 001C, a closed finished component away from the boundary
  ZZZC = 6,  // 000C, no edges
};

inline const char* to_label(PtsClass c) {
  switch (c) {
    case PtsClass::UU1C: return "UU1C";
    case PtsClass::EE1C: return "EE1C";
    case PtsClass::ZE1C: return "0E1C";
    case PtsClass::EZ1C: return "E01C";
    case PtsClass::EE2C: return "EE2C";
    case PtsClass::ZZ1C: return "001C";
    case PtsClass::ZZZC: return "000C";
  }
  return "?";
}

/// One side of a column boundary. left_of(j) holds corners a_j, b_j plus
/// everything strictly left of aisle j; right_of(j) holds corners a_{j+1},
/// b_{j+1} plus everything strictly right of aisle j+1.
struct SideRestriction {
  int boundary = 0;  // column whose corners bound the side
  bool left = true;
  static SideRestriction left_of(int j) { return {j, true}; }
  static SideRestriction right_of(int j) { return {j + 1, false}; }
};

inline bool side_contains_edge(const SideRestriction& side, const Edge& e) {
  if (side.left) {
    return e.kind == EdgeKind::AisleSegment ? e.aisle < side.boundary
                                            : e.aisle < side.boundary;
  }
  return e.kind == EdgeKind::AisleSegment ? e.aisle > side.boundary
                                          : e.aisle >= side.boundary;
}

inline TourSubgraph restrict_to_side(const TourSubgraph& t, const SideRestriction& side) {
  TourSubgraph out;
  for (const auto& [e, m] : t.edges())
    if (side_contains_edge(side, e)) out.set(e, m);
  return out;
}

struct PtsResult {
  std::optional<PtsClass> cls;
  std::string reason;       // filled when the restriction is not a PTS
  int witness_vertex = -1;  // filled when the restriction is not a PTS
  bool is_class() const { return cls.has_value(); }
};

/// Classifies a side restriction by corner parities and component structure,
/// or reports why it cannot be completed into a tour subgraph.
inline PtsResult pts_class(const WarehouseInstance& w, const TourSubgraph& t,
                           const SideRestriction& side) {
  if (side.boundary < 0 || side.boundary >= w.aisle_count())
    throw InvalidRestrictionError("side boundary out of range");
  for (const auto& [e, m] : t.edges()) {
    (void)m;
    if (!edge_in_graph(w, e)) throw InvalidEdgeError("edge not in warehouse graph");
    if (!side_contains_edge(side, e))
      throw InvalidRestrictionError("edge outside the side subgraph");
  }

  const int ca = w.top_corner_id(side.boundary);
  const int cb = w.bottom_corner_id(side.boundary);
  auto deg = vertex_degrees(w, t);

  // Every target strictly inside the side must already be covered; the
  // boundary corners can still be reached from the other side.
  for (int target : w.target_vertex_ids()) {
    int col = w.vertex_aisle(target);
    bool strictly_inside = side.left ? col < side.boundary : col > side.boundary;
    if (strictly_inside && deg[target] == 0)
      return {std::nullopt, "uncovered target inside the side", target};
  }
  for (int v = 0; v < w.vertex_count(); ++v) {
    if (v == ca || v == cb) continue;
    if (deg[v] % 2 != 0)
      return {std::nullopt, "odd degree away from the boundary", v};
  }

  detail::UnionFind uf(w.vertex_count());
  for (const auto& [e, m] : t.edges()) {
    if (m == 0) continue;
    auto [u, v] = edge_endpoints(w, e);
    uf.unite(u, v);
  }
  std::vector<int> roots;
  for (int v = 0; v < w.vertex_count(); ++v) {
    if (deg[v] == 0) continue;
    int r = uf.find(v);
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }

  auto parity_of = [&](int v) -> char {
    if (deg[v] == 0) return '0';
    return deg[v] % 2 == 1 ? 'U' : 'E';
  };
  const char pa = parity_of(ca);
  const char pb = parity_of(cb);

  if (roots.empty()) return {PtsClass::ZZZC, "", -1};
  if (roots.size() == 1) {
    bool holds_a = deg[ca] > 0 && uf.find(ca) == roots[0];
    bool holds_b = deg[cb] > 0 && uf.find(cb) == roots[0];
    if (!holds_a && !holds_b) return {PtsClass::ZZ1C, "", -1};
    if (holds_a && holds_b) {
      if (pa == 'U' && pb == 'U') return {PtsClass::UU1C, "", -1};
      if (pa == 'E' && pb == 'E') return {PtsClass::EE1C, "", -1};
      return {std::nullopt, "mismatched corner parities in one component", ca};
    }
    if (holds_a) {
      if (pa == 'E') return {PtsClass::EZ1C, "", -1};
      return {std::nullopt, "odd corner with detached partner", ca};
    }
    if (pb == 'E') return {PtsClass::ZE1C, "", -1};
    return {std::nullopt, "odd corner with detached partner", cb};
  }
  if (roots.size() == 2) {
    bool split = deg[ca] > 0 && deg[cb] > 0 && uf.find(ca) != uf.find(cb);
    if (split && pa == 'E' && pb == 'E') return {PtsClass::EE2C, "", -1};
    if (split) return {std::nullopt, "two components with odd corners", ca};
    // some component holds neither corner while other edges exist
    int witness = (deg[ca] > 0 && uf.find(ca) == roots[0]) ||
                          (deg[cb] > 0 && uf.find(cb) == roots[0])
                      ? roots[1]
                      : roots[0];
    return {std::nullopt, "component attached to neither boundary corner", witness};
  }
  return {std::nullopt, "more than two components", roots[2]};
}

// --- mirror transforms -----------------------------------------------------------

/// Reflection across a vertical axis: reverses the aisle order.
inline WarehouseInstance mirror_left_right(const WarehouseInstance& w) {
  std::vector<Length> lengths(w.aisle_lengths().rbegin(), w.aisle_lengths().rend());
  std::vector<std::vector<Length>> picks(w.picks().rbegin(), w.picks().rend());
  std::vector<Length> top(w.top_segments().rbegin(), w.top_segments().rend());
  std::vector<Length> bottom(w.bottom_segments().rbegin(), w.bottom_segments().rend());
  DepotSpec d = w.depot();
  d.aisle = w.aisle_count() - 1 - d.aisle;
  return WarehouseInstance::create(std::move(lengths), std::move(picks),
                                   std::move(top), std::move(bottom), d);
}

inline TourSubgraph mirror_left_right(const WarehouseInstance& w,
                                      const TourSubgraph& t) {
  const int n = w.aisle_count();
  TourSubgraph out;
  for (const auto& [e, m] : t.edges()) {
    Edge me = e;
    me.aisle = (e.kind == EdgeKind::AisleSegment) ? n - 1 - e.aisle : n - 2 - e.aisle;
    out.set(me, m);
  }
  return out;
}

/// Reflection across a horizontal axis: swaps the two cross aisles and
/// measures every offset from the other corner.
inline WarehouseInstance mirror_top_bottom(const WarehouseInstance& w) {
  std::vector<std::vector<Length>> picks(w.aisle_count());
  for (int j = 0; j < w.aisle_count(); ++j) {
    for (auto it = w.picks()[j].rbegin(); it != w.picks()[j].rend(); ++it)
      picks[j].push_back(w.aisle_length(j) - *it);
  }
  DepotSpec d = w.depot();
  d.offset = w.aisle_length(d.aisle) - d.offset;
  return WarehouseInstance::create(w.aisle_lengths(), std::move(picks),
                                   w.bottom_segments(), w.top_segments(), d);
}

inline TourSubgraph mirror_top_bottom(const WarehouseInstance& w,
                                      const TourSubgraph& t) {
  TourSubgraph out;
  for (const auto& [e, m] : t.edges()) {
    Edge me = e;
    switch (e.kind) {
      case EdgeKind::AisleSegment:
        me.seg = w.segment_count(e.aisle) - 1 - e.seg;
        break;
      case EdgeKind::TopRail:
        me.kind = EdgeKind::BottomRail;
        break;
      case EdgeKind::BottomRail:
        me.kind = EdgeKind::TopRail;
        break;
    }
    out.set(me, m);
  }
  return out;
}

}  // namespace aisle_router
