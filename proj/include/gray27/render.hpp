#pragma once

// Static diagrams of a hyperplane: the three layers d1 = 0, 1, 2 as 3x3
// grids (row d2, column d3). Within a layer, lines along d3 are horizontal
// and lines along d2 vertical; lines along d1 cross the layers.

#include <sstream>
#include <string>
#include <vector>

#include "gray27/hyperplanes.hpp"

namespace gray27 {

namespace detail {

inline int line_index(const Geometry& g, Point p, int axis) { return g.lines_through(p)[axis]; }

inline bool line_in(const Geometry& g, PointSet h, Point p, int axis) {
  return h.contains(g.line(line_index(g, p, axis)).mask);
}

}  // namespace detail

// '@' deep point, 'o' other member, '.' non-member. '---' and '|' are lines
// inside the hyperplane; lines across layers are listed below the grids.
inline std::string render_ascii(const Geometry& g, PointSet h) {
  if (!is_hyperplane(g, h)) throw HyperplaneError("not a hyperplane: " + h.to_string());
  ClassSignature sig = classify(g, h);
  std::ostringstream out;
  out << to_string(sig.type) << " id " << h.mask() << ": " << sig.n_points << " points, " << sig.n_lines
      << " lines, " << sig.order_profile[3] << " deep\n\n";
  out << "d1=0         d1=1         d1=2\n";
  for (int r = 0; r < 3; ++r) {
    std::string row, below;
    for (int layer = 0; layer < 3; ++layer) {
      for (int c = 0; c < 3; ++c) {
        Point p = Point::from_digits(layer, r, c);
        char mark = !h.contains(p) ? '.' : point_order(g, h, p) == 3 ? '@' : 'o';
        row += mark;
        if (c < 2) row += detail::line_in(g, h, p, 2) ? "---" : "   ";
        below += detail::line_in(g, h, p, 1) ? '|' : ' ';
        if (c < 2) below += "   ";
      }
      if (layer < 2) {
        row += "    ";
        below += "    ";
      }
    }
    below.erase(below.find_last_not_of(' ') + 1);
    out << row << '\n';
    if (r < 2) out << below << '\n';
  }
  std::vector<std::string> across;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (detail::line_in(g, h, Point::from_digits(0, r, c), 0))
        across.push_back("*" + std::to_string(r) + std::to_string(c));
  out << "\nacross layers:";
  if (across.empty()) out << " none";
  for (const auto& a : across) out << ' ' << a;
  out << '\n';
  return out.str();
}

// Members filled, deep points with an extra ring, lines inside drawn bold.
// Lines across layers are dashed arcs through the three panels.
inline std::string render_svg(const Geometry& g, PointSet h) {
  if (!is_hyperplane(g, h)) throw HyperplaneError("not a hyperplane: " + h.to_string());
  constexpr int step = 60, margin = 40, panel = 2 * step + 2 * margin;
  auto x_of = [&](Point p) { return p.digit(0) * panel + margin + p.digit(2) * step; };
  auto y_of = [&](Point p) { return margin + 20 + p.digit(1) * step; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 3 * panel << "\" height=\"" << 2 * step + 2 * margin + 20
      << "\" font-family=\"monospace\" font-size=\"11\">\n";
  for (int layer = 0; layer < 3; ++layer)
    out << "  <text x=\"" << layer * panel + margin << "\" y=\"20\">d1=" << layer << "</text>\n";

  for (const Line& l : g.lines()) {
    bool in = h.contains(l.mask);
    const char* style = in ? "stroke=\"black\" stroke-width=\"4\"" : "stroke=\"#bbb\" stroke-width=\"1\"";
    const char* cls = in ? "line-in" : "line-out";
    auto [a, b, c] = l.points;
    if (l.axis != 0) {
      out << "  <line x1=\"" << x_of(a) << "\" y1=\"" << y_of(a) << "\" x2=\"" << x_of(c) << "\" y2=\"" << y_of(c)
          << "\" " << style << " class=\"" << cls << "\"/>\n";
      continue;
    }
    // Arcs hop over the points between panels.
    out << "  <path d=\"M " << x_of(a) << ' ' << y_of(a) << " Q " << (x_of(a) + x_of(b)) / 2 << ' ' << y_of(a) - 24
        << ' ' << x_of(b) << ' ' << y_of(b) << " Q " << (x_of(b) + x_of(c)) / 2 << ' ' << y_of(b) - 24 << ' '
        << x_of(c) << ' ' << y_of(c) << "\" fill=\"none\" stroke-dasharray=\"6,4\" " << style << " class=\"" << cls
        << "\"/>\n";
  }
  for (int i = 0; i < kNumPoints; ++i) {
    Point p(i);
    bool in = h.contains(p);
    if (in && point_order(g, h, p) == 3)
      out << "  <circle cx=\"" << x_of(p) << "\" cy=\"" << y_of(p)
          << "\" r=\"13\" fill=\"white\" stroke=\"black\" stroke-width=\"2\" class=\"deep\"/>\n";
    out << "  <circle cx=\"" << x_of(p) << "\" cy=\"" << y_of(p) << "\" r=\"8\" fill=\"" << (in ? "black" : "white")
        << "\" stroke=\"" << (in ? "black" : "#999") << "\" class=\"" << (in ? "member" : "other") << "\"/>\n";
    out << "  <text x=\"" << x_of(p) + 10 << "\" y=\"" << y_of(p) - 10 << "\">" << p.label() << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace gray27
