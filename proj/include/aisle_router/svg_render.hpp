#pragma once

// SVG rendering of instances and tours. Corners are filled dots, picks open
// circles, the depot a filled square; doubled edges draw as parallel strokes.

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "aisle_router/model.hpp"

namespace aisle_router {

struct RenderSpec {
  double scale = 6.0;  // pixels per distance unit
  bool show_labels = false;
};

namespace detail {

struct Point {
  double x = 0, y = 0;
};

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << v;
  return os.str();
}

inline void line(std::ostringstream& os, Point a, Point b, const char* color,
                 double width) {
  os << "  <line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\""
     << fmt(b.x) << "\" y2=\"" << fmt(b.y) << "\" stroke=\"" << color
     << "\" stroke-width=\"" << fmt(width) << "\"/>\n";
}

inline void stroked(std::ostringstream& os, Point a, Point b, std::int64_t m,
                    const char* color, double width) {
  if (m <= 0) return;
  if (m == 1) {
    line(os, a, b, color, width);
    return;
  }
  double dx = b.x - a.x, dy = b.y - a.y;
  double len = std::sqrt(dx * dx + dy * dy);
  if (len < 1e-9) return;
  double ox = -dy / len * 1.6, oy = dx / len * 1.6;
  line(os, {a.x + ox, a.y + oy}, {b.x + ox, b.y + oy}, color, width);
  line(os, {a.x - ox, a.y - oy}, {b.x - ox, b.y - oy}, color, width);
}

}  // namespace detail

inline std::string render_svg(const WarehouseInstance& w, const TourSubgraph* tour,
                              const RenderSpec& spec) {
  if (spec.scale <= 0) throw ContractError("render scale must be positive");
  const double s = spec.scale;
  const double margin = 4 * s;
  const int n = w.aisle_count();

  std::vector<detail::Point> top(n), bottom(n);
  double xt = margin, xb = margin;
  Length dmax = 0;
  for (int j = 0; j < n; ++j) dmax = std::max(dmax, w.aisle_length(j));
  for (int j = 0; j < n; ++j) {
    top[j] = {xt, margin};
    bottom[j] = {xb, margin + s * static_cast<double>(w.aisle_length(j))};
    if (j < n - 1) {
      xt += s * static_cast<double>(w.top_segments()[j]);
      xb += s * static_cast<double>(w.bottom_segments()[j]);
    }
  }
  double width = std::max(xt, xb) + margin;
  double height = margin * 2 + s * static_cast<double>(dmax);

  auto station_point = [&](int j, const Station& st) {
    double t = static_cast<double>(st.offset) / static_cast<double>(w.aisle_length(j));
    return detail::Point{top[j].x + (bottom[j].x - top[j].x) * t,
                         top[j].y + (bottom[j].y - top[j].y) * t};
  };
  auto vertex_point = [&](int j, int s_idx) {
    const int k = static_cast<int>(w.stations(j).size());
    if (s_idx == 0) return top[j];
    if (s_idx == k + 1) return bottom[j];
    return station_point(j, w.stations(j)[s_idx - 1]);
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::fmt(width)
     << "\" height=\"" << detail::fmt(height) << "\" viewBox=\"0 0 "
     << detail::fmt(width) << " " << detail::fmt(height) << "\">\n";

  // warehouse layout in light gray
  for (int j = 0; j < n; ++j) detail::line(os, top[j], bottom[j], "#cccccc", 1.0);
  for (int j = 0; j + 1 < n; ++j) {
    detail::line(os, top[j], top[j + 1], "#cccccc", 1.0);
    detail::line(os, bottom[j], bottom[j + 1], "#cccccc", 1.0);
  }

  if (tour) {
    for (const auto& [e, m] : tour->edges()) {
      switch (e.kind) {
        case EdgeKind::AisleSegment:
          detail::stroked(os, vertex_point(e.aisle, e.seg),
                          vertex_point(e.aisle, e.seg + 1), m, "#d62728", 1.8);
          break;
        case EdgeKind::TopRail:
          detail::stroked(os, top[e.aisle], top[e.aisle + 1], m, "#d62728", 1.8);
          break;
        case EdgeKind::BottomRail:
          detail::stroked(os, bottom[e.aisle], bottom[e.aisle + 1], m, "#d62728", 1.8);
          break;
      }
    }
  }

  for (int j = 0; j < n; ++j) {
    os << "  <circle cx=\"" << detail::fmt(top[j].x) << "\" cy=\""
       << detail::fmt(top[j].y) << "\" r=\"2.5\" fill=\"#000000\"/>\n";
    os << "  <circle cx=\"" << detail::fmt(bottom[j].x) << "\" cy=\""
       << detail::fmt(bottom[j].y) << "\" r=\"2.5\" fill=\"#000000\"/>\n";
    for (const Station& st : w.stations(j)) {
      auto p = station_point(j, st);
      if (st.pick_index >= 0)
        os << "  <circle cx=\"" << detail::fmt(p.x) << "\" cy=\"" << detail::fmt(p.y)
           << "\" r=\"2.5\" fill=\"#ffffff\" stroke=\"#000000\"/>\n";
    }
  }
  {
    int dj = w.depot().aisle;
    double t = w.aisle_length(dj) == 0
                   ? 0.0
                   : static_cast<double>(w.depot().offset) /
                         static_cast<double>(w.aisle_length(dj));
    detail::Point p{top[dj].x + (bottom[dj].x - top[dj].x) * t,
                    top[dj].y + (bottom[dj].y - top[dj].y) * t};
    os << "  <rect x=\"" << detail::fmt(p.x - 3) << "\" y=\"" << detail::fmt(p.y - 3)
       << "\" width=\"6\" height=\"6\" fill=\"#1f77b4\"/>\n";
  }

  if (spec.show_labels) {
    for (int j = 0; j < n; ++j) {
      os << "  <text x=\"" << detail::fmt(top[j].x - 2) << "\" y=\""
         << detail::fmt(top[j].y - 6) << "\" font-size=\"8\">a" << (j + 1)
         << "</text>\n";
      os << "  <text x=\"" << detail::fmt(bottom[j].x - 2) << "\" y=\""
         << detail::fmt(bottom[j].y + 12) << "\" font-size=\"8\">b" << (j + 1)
         << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace aisle_router
