#include <gtest/gtest.h>

#include <array>
#include <queue>
#include <set>

#include "gray27/geometry.hpp"

using namespace gray27;

namespace {

// Distances from an adjacency rule written directly on digit triples, with no
// reference to the line list.
std::array<std::array<int, 27>, 27> digit_bfs() {
  auto adjacent = [](int a, int b) {
    int diff = 0;
    for (int k = 0; k < 3; ++k) diff += Point(a).digit(k) != Point(b).digit(k);
    return diff == 1;
  };
  std::array<std::array<int, 27>, 27> d{};
  for (int s = 0; s < 27; ++s) {
    d[s].fill(-1);
    d[s][s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < 27; ++v)
        if (adjacent(u, v) && d[s][v] < 0) {
          d[s][v] = d[s][u] + 1;
          q.push(v);
        }
    }
  }
  return d;
}

}  // namespace

TEST(Point, EncodingAndLabels) {
  EXPECT_EQ(Point::parse("000").index(), 0);
  EXPECT_EQ(Point::parse("012").index(), 5);
  EXPECT_EQ(Point::parse("222").index(), 26);
  for (int i = 0; i < kNumPoints; ++i) EXPECT_EQ(Point::parse(Point(i).label()).index(), i);
  EXPECT_EQ(Point::from_digits(1, 0, 2).label(), "102");
  EXPECT_THROW(Point::parse("013x"), std::exception);
  EXPECT_THROW(Point::parse("03"), std::exception);
  EXPECT_THROW(Point(27), std::exception);
}

TEST(PointSet, BasicAlgebra) {
  PointSet a{Point(0), Point(1), Point(2)};
  EXPECT_EQ(a.size(), 3);
  EXPECT_EQ(a.complement().size(), 24);
  EXPECT_TRUE(PointSet::full().is_full());
  EXPECT_EQ((a ^ a), PointSet{});
  EXPECT_EQ(a.to_string(), "000 001 002");
  EXPECT_THROW(PointSet(1U << 27), std::out_of_range);
}

TEST(Grid, IncidenceCounts) {
  const Geometry& g = grid();
  EXPECT_EQ(g.lines().size(), 27u);
  EXPECT_EQ(g.quads().size(), 9u);
  for (const Line& l : g.lines()) EXPECT_EQ(l.mask.size(), 3);
  for (int i = 0; i < kNumPoints; ++i) {
    std::set<int> axes;
    for (int li : g.lines_through(Point(i))) {
      EXPECT_TRUE(g.line(li).mask.contains(Point(i)));
      axes.insert(g.line(li).axis);
    }
    EXPECT_EQ(axes.size(), 3u);
  }
  for (const Quad& q : g.quads()) {
    EXPECT_EQ(q.points.size(), 9);
    for (int li : q.internal_lines) EXPECT_TRUE(q.points.contains(g.line(li).mask));
    EXPECT_EQ(g.lines_inside(q.points), 6);
  }
}

TEST(Grid, DistancesMatchIndependentBfsAndHamming) {
  const Geometry& g = grid();
  auto d = digit_bfs();
  int edges = 0;
  for (int a = 0; a < 27; ++a)
    for (int b = 0; b < 27; ++b) {
      EXPECT_EQ(g.distance(Point(a), Point(b)), d[a][b]);
      EXPECT_EQ(hamming_distance(Point(a), Point(b)), d[a][b]);
      if (a < b && g.collinear(Point(a), Point(b))) ++edges;
    }
  EXPECT_EQ(edges, 81);
}

TEST(Grid, NearPolygonProperty) {
  const Geometry& g = grid();
  for (int i = 0; i < kNumPoints; ++i)
    for (const Line& l : g.lines()) {
      int best = 4, at_best = 0;
      for (Point q : l.points) {
        int dq = g.distance(Point(i), q);
        if (dq < best) {
          best = dq;
          at_best = 1;
        } else if (dq == best) {
          ++at_best;
        }
      }
      EXPECT_EQ(at_best, 1) << Point(i).label();
    }
}

TEST(Grid, DensityAndDiameter) {
  const Geometry& g = grid();
  for (int a = 0; a < 27; ++a)
    for (int b = 0; b < 27; ++b) {
      EXPECT_LE(g.distance(Point(a), Point(b)), 3);
      if (g.distance(Point(a), Point(b)) != 2) continue;
      int common = 0;
      for (int c = 0; c < 27; ++c)
        common += g.collinear(Point(a), Point(c)) && g.collinear(Point(b), Point(c));
      EXPECT_EQ(common, 2);
    }
}

TEST(Grid, BallsAndPerp) {
  const Geometry& g = grid();
  for (int i = 0; i < kNumPoints; ++i) {
    EXPECT_EQ(g.ball(Point(i), 0).size(), 1);
    EXPECT_EQ(g.perp(Point(i)).size(), 7);
    EXPECT_EQ(g.ball(Point(i), 2).size(), 19);
    EXPECT_TRUE(g.ball(Point(i), 3).is_full());
  }
}

TEST(Subspaces, QuadsAreGeodeticallyClosed) {
  const Geometry& g = grid();
  for (const Quad& q : g.quads()) {
    EXPECT_TRUE(is_subspace(g, q.points));
    EXPECT_TRUE(is_geodetically_closed(g, q.points));
  }
  PointSet opposite{Point::parse("000"), Point::parse("111")};
  EXPECT_TRUE(is_subspace(g, opposite));
  EXPECT_FALSE(is_geodetically_closed(g, opposite));
}

TEST(Subspaces, RejectsPartialLines) {
  const Geometry& g = grid();
  PointSet two{Point::parse("000"), Point::parse("001")};
  EXPECT_FALSE(is_subspace(g, two));
  EXPECT_FALSE(is_subspace(g, PointSet{}));
  EXPECT_THROW(is_geodetically_closed(g, two), GeometryError);
}

TEST(Subspaces, HyperplanePredicate) {
  const Geometry& g = grid();
  EXPECT_TRUE(is_hyperplane(g, g.ball(Point(0), 2)));
  EXPECT_FALSE(is_hyperplane(g, PointSet::full()));
  EXPECT_FALSE(is_hyperplane(g, g.perp(Point(0))));
}
