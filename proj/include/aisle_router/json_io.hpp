#pragma once

// JSON file formats for instances and tours. Emission uses a fixed key and
// edge order so identical values serialize to identical bytes.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "aisle_router/model.hpp"

namespace aisle_router {

namespace detail {

using Json = nlohmann::ordered_json;

inline Json require_field(const Json& obj, const char* key, const char* what) {
  if (!obj.is_object() || !obj.contains(key))
    throw ParseError(std::string(what) + " is missing field '" + key + "'");
  return obj.at(key);
}

inline Length int_field(const Json& obj, const char* key, const char* what) {
  Json v = require_field(obj, key, what);
  if (!v.is_number_integer())
    throw ParseError(std::string(what) + " field '" + key + "' must be an integer");
  return v.get<Length>();
}

/// Resolves "a3", "b1", "p2.4" or "depot" to a vertex id.
inline int parse_vertex_name(const WarehouseInstance& w, const std::string& name) {
  if (name == "depot") return w.depot_vertex_id();
  if (name.size() >= 2 && (name[0] == 'a' || name[0] == 'b')) {
    int j = 0;
    try {
      j = std::stoi(name.substr(1));
    } catch (...) {
      throw ParseError("bad vertex id '" + name + "'");
    }
    if (j < 1 || j > w.aisle_count())
      throw ParseError("vertex id '" + name + "' is outside the warehouse");
    return name[0] == 'a' ? w.top_corner_id(j - 1) : w.bottom_corner_id(j - 1);
  }
  if (name.size() >= 4 && name[0] == 'p') {
    auto dot = name.find('.');
    if (dot == std::string::npos) throw ParseError("bad vertex id '" + name + "'");
    int j = 0, k = 0;
    try {
      j = std::stoi(name.substr(1, dot - 1));
      k = std::stoi(name.substr(dot + 1));
    } catch (...) {
      throw ParseError("bad vertex id '" + name + "'");
    }
    if (j < 1 || j > w.aisle_count())
      throw ParseError("vertex id '" + name + "' is outside the warehouse");
    const auto& sts = w.stations(j - 1);
    for (int s = 0; s < static_cast<int>(sts.size()); ++s)
      if (sts[s].pick_index == k - 1) return w.station_vertex_id(j - 1, s);
    throw ParseError("vertex id '" + name + "' is outside the warehouse");
  }
  throw ParseError("bad vertex id '" + name + "'");
}

/// Maps a pair of adjacent vertices back to the graph edge between them.
inline Edge edge_between(const WarehouseInstance& w, int u, int v) {
  if (u > v) std::swap(u, v);
  const int ja = w.vertex_aisle(u);
  const int jb = w.vertex_aisle(v);
  if (ja == jb) {
    int base = w.top_corner_id(ja);
    if (v - u != 1)
      throw InvalidEdgeError("vertices are not adjacent within the aisle");
    return aisle_edge(ja, u - base);
  }
  if (jb == ja + 1) {
    if (u == w.top_corner_id(ja) && v == w.top_corner_id(jb)) return top_rail(ja);
    if (u == w.bottom_corner_id(ja) && v == w.bottom_corner_id(jb))
      return bottom_rail(ja);
  }
  throw InvalidEdgeError("vertices are not adjacent in the warehouse graph");
}

}  // namespace detail

inline WarehouseInstance parse_instance(const std::string& text) {
  detail::Json doc;
  try {
    doc = detail::Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("instance is not valid JSON: ") + e.what());
  }
  detail::Json aisles = detail::require_field(doc, "aisles", "instance");
  if (!aisles.is_array() || aisles.empty())
    throw ParseError("instance field 'aisles' must be a non-empty array");
  std::vector<Length> lengths;
  std::vector<std::vector<Length>> picks;
  for (const auto& a : aisles) {
    lengths.push_back(detail::int_field(a, "length", "aisle"));
    detail::Json pk = detail::require_field(a, "picks", "aisle");
    if (!pk.is_array()) throw ParseError("aisle field 'picks' must be an array");
    std::vector<Length> offs;
    for (const auto& x : pk) {
      if (!x.is_number_integer()) throw ParseError("pick offsets must be integers");
      offs.push_back(x.get<Length>());
    }
    picks.push_back(std::move(offs));
  }
  auto read_lens = [&](const char* key) {
    detail::Json arr = detail::require_field(doc, key, "instance");
    if (!arr.is_array())
      throw ParseError(std::string("instance field '") + key + "' must be an array");
    std::vector<Length> out;
    for (const auto& x : arr) {
      if (!x.is_number_integer())
        throw ParseError(std::string(key) + " entries must be integers");
      out.push_back(x.get<Length>());
    }
    return out;
  };
  std::vector<Length> top = read_lens("top_segments");
  std::vector<Length> bottom = read_lens("bottom_segments");
  detail::Json dep = detail::require_field(doc, "depot", "instance");
  DepotSpec depot;
  depot.aisle = static_cast<std::int32_t>(detail::int_field(dep, "aisle", "depot")) - 1;
  depot.offset = detail::int_field(dep, "offset", "depot");
  if (depot.aisle < 0) throw ParseError("depot aisle is 1-based and must be >= 1");
  try {
    return WarehouseInstance::create(std::move(lengths), std::move(picks),
                                     std::move(top), std::move(bottom), depot);
  } catch (const InvalidInstanceError& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
}

inline std::string emit_instance(const WarehouseInstance& w) {
  detail::Json doc;
  doc["aisles"] = detail::Json::array();
  for (int j = 0; j < w.aisle_count(); ++j) {
    detail::Json a;
    a["length"] = w.aisle_length(j);
    a["picks"] = w.picks()[j];
    doc["aisles"].push_back(std::move(a));
  }
  doc["top_segments"] = w.top_segments();
  doc["bottom_segments"] = w.bottom_segments();
  doc["depot"] = {{"aisle", w.depot().aisle + 1}, {"offset", w.depot().offset}};
  return doc.dump(2) + "\n";
}

inline TourSubgraph parse_tour(const WarehouseInstance& w, const std::string& text) {
  detail::Json doc;
  try {
    doc = detail::Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("tour is not valid JSON: ") + e.what());
  }
  detail::Json edges = detail::require_field(doc, "edges", "tour");
  if (!edges.is_array()) throw ParseError("tour field 'edges' must be an array");
  TourSubgraph t;
  for (const auto& entry : edges) {
    detail::Json from = detail::require_field(entry, "from", "edge");
    detail::Json to = detail::require_field(entry, "to", "edge");
    if (!from.is_string() || !to.is_string())
      throw ParseError("edge endpoints must be vertex id strings");
    Length m = detail::int_field(entry, "mult", "edge");
    if (m < 0) throw ParseError("edge multiplicity cannot be negative");
    int u = detail::parse_vertex_name(w, from.get<std::string>());
    int v = detail::parse_vertex_name(w, to.get<std::string>());
    Edge e;
    try {
      e = detail::edge_between(w, u, v);
    } catch (const InvalidEdgeError& err) {
      throw ParseError(std::string("invalid tour edge: ") + err.what());
    }
    if (m > 0) t.add(e, m);
  }
  Length stated = detail::int_field(doc, "length", "tour");
  if (stated != tour_length(w, t))
    throw ParseError("tour length field does not match its edges");
  return t;
}

inline std::string emit_tour(const WarehouseInstance& w, const TourSubgraph& t) {
  detail::Json doc;
  doc["edges"] = detail::Json::array();
  for (const auto& [e, m] : t.edges()) {
    auto [u, v] = edge_endpoints(w, e);
    detail::Json entry;
    entry["from"] = w.vertex_name(u);
    entry["to"] = w.vertex_name(v);
    entry["mult"] = m;
    doc["edges"].push_back(std::move(entry));
  }
  doc["length"] = tour_length(w, t);
  return doc.dump(2) + "\n";
}

}  // namespace aisle_router
