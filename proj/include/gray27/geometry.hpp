#pragma once

// The 3x3x3 grid: 27 points, 27 lines of three points, nine 3x3 quads.

#include <algorithm>
#include <array>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "gray27/point_set.hpp"

namespace gray27 {

inline constexpr int kNumLines = 27;
inline constexpr int kNumQuads = 9;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Line {
  std::array<Point, 3> points;  // ascending
  int axis = 0;                 // digit position varying along the line
  PointSet mask;
};

struct Quad {
  int fixed_position = 0;
  int fixed_value = 0;
  PointSet points;
  std::array<int, 6> internal_lines{};  // indices into Geometry::lines()
};

// Collinearity-graph distances by breadth-first search over the line set.
inline std::array<std::array<int, kNumPoints>, kNumPoints> bfs_distances(const std::vector<Line>& lines) {
  std::array<std::vector<int>, kNumPoints> adjacent;
  for (const Line& l : lines)
    for (Point a : l.points)
      for (Point b : l.points)
        if (a != b) adjacent[a.index()].push_back(b.index());

  std::array<std::array<int, kNumPoints>, kNumPoints> dist{};
  for (int s = 0; s < kNumPoints; ++s) {
    dist[s].fill(-1);
    dist[s][s] = 0;
    std::queue<int> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      for (int v : adjacent[u])
        if (dist[s][v] < 0) {
          dist[s][v] = dist[s][u] + 1;
          frontier.push(v);
        }
    }
  }
  return dist;
}

// Immutable after construction; safe to share across threads.
class Geometry {
 public:
  const std::vector<Line>& lines() const { return lines_; }
  const std::vector<Quad>& quads() const { return quads_; }
  const Line& line(int i) const { return lines_.at(i); }
  const Quad& quad(int i) const { return quads_.at(i); }

  // Indices of the three lines through p, ordered by axis.
  const std::array<int, 3>& lines_through(Point p) const { return lines_through_[p.index()]; }

  int distance(Point p, Point q) const { return distance_[p.index()][q.index()]; }
  bool collinear(Point p, Point q) const { return distance(p, q) == 1; }

  // Points sharing a quad with p (including p): Hamming distance at most 2.
  bool coplanar(Point p, Point q) const { return distance(p, q) <= 2; }

  // p together with its collinear neighbours.
  PointSet perp(Point p) const { return within_[p.index()][1]; }

  // Points at distance at most r from p.
  PointSet ball(Point p, int r) const { return within_[p.index()][std::clamp(r, 0, 3)]; }

  // Number of lines fully inside s.
  int lines_inside(PointSet s) const {
    int n = 0;
    for (const Line& l : lines_) n += s.contains(l.mask) ? 1 : 0;
    return n;
  }

  friend Geometry build_grid();

 private:
  Geometry() = default;

  std::vector<Line> lines_;
  std::vector<Quad> quads_;
  std::array<std::array<int, 3>, kNumPoints> lines_through_{};
  std::array<std::array<int, kNumPoints>, kNumPoints> distance_{};
  std::array<std::array<PointSet, 4>, kNumPoints> within_{};
};

inline int hamming_distance(Point p, Point q) {
  int d = 0;
  for (int i = 0; i < 3; ++i) d += p.digit(i) != q.digit(i) ? 1 : 0;
  return d;
}

// Lines are ordered by axis, then by the two fixed digits in index order.
// Quads are ordered by fixed position, then fixed value.
inline Geometry build_grid() {
  Geometry g;
  for (int axis = 0; axis < 3; ++axis) {
    for (int base = 0; base < kNumPoints; ++base) {
      Point b(base);
      if (b.digit(axis) != 0) continue;
      Line l;
      l.axis = axis;
      for (int v = 0; v < 3; ++v) {
        auto d = b.digits();
        d[axis] = v;
        l.points[v] = Point::from_digits(d[0], d[1], d[2]);
        l.mask.insert(l.points[v]);
      }
      g.lines_.push_back(l);
    }
  }

  std::array<int, kNumPoints> seen{};
  for (int i = 0; i < kNumLines; ++i)
    for (Point p : g.lines_[i].points) g.lines_through_[p.index()][seen[p.index()]++] = i;
  for (int n : seen)
    if (n != 3) throw GeometryError("grid construction: a point is not on exactly three lines");

  for (int pos = 0; pos < 3; ++pos) {
    for (int val = 0; val < 3; ++val) {
      Quad q;
      q.fixed_position = pos;
      q.fixed_value = val;
      for (int i = 0; i < kNumPoints; ++i)
        if (Point(i).digit(pos) == val) q.points.insert(Point(i));
      int k = 0;
      for (int i = 0; i < kNumLines; ++i)
        if (q.points.contains(g.lines_[i].mask)) {
          if (k == 6) throw GeometryError("grid construction: quad has more than six lines");
          q.internal_lines[k++] = i;
        }
      if (k != 6) throw GeometryError("grid construction: quad does not have six lines");
      g.quads_.push_back(q);
    }
  }

  // Distances use the Hamming metric, certified against BFS once.
  auto bfs = bfs_distances(g.lines_);
  for (int p = 0; p < kNumPoints; ++p) {
    for (int q = 0; q < kNumPoints; ++q) {
      int d = hamming_distance(Point(p), Point(q));
      if (bfs[p][q] != d) throw GeometryError("grid construction: Hamming distance disagrees with BFS");
      g.distance_[p][q] = d;
      for (int r = d; r <= 3; ++r) g.within_[p][r].insert(Point(q));
    }
  }
  return g;
}

// Shared instance of the grid.
inline const Geometry& grid() {
  static const Geometry g = build_grid();
  return g;
}

// Nonempty and closed under lines meeting it in two points.
inline bool is_subspace(const Geometry& g, PointSet s) {
  if (s.empty()) return false;
  for (const Line& l : g.lines()) {
    if ((l.mask & s).size() == 2) return false;
  }
  return true;
}

inline bool is_geodetically_closed(const Geometry& g, PointSet s) {
  if (!is_subspace(g, s)) throw GeometryError("geodetic closure test needs a subspace");
  for (Point p : s) {
    for (Point q : s) {
      int d = g.distance(p, q);
      for (int r = 0; r < kNumPoints; ++r) {
        Point x(r);
        if (g.distance(p, x) + g.distance(x, q) == d && !s.contains(x)) return false;
      }
    }
  }
  return true;
}

// Proper subset meeting every line in one or three points.
inline bool is_hyperplane(const Geometry& g, PointSet s) {
  if (s.is_full()) return false;
  for (const Line& l : g.lines()) {
    int n = (l.mask & s).size();
    if (n != 1 && n != 3) return false;
  }
  return true;
}

}  // namespace gray27
