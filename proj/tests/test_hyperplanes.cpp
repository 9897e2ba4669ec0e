#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "gray27/hyperplane_scan.hpp"
#include "gray27/hyperplanes.hpp"

using namespace gray27;

namespace {

const std::vector<PointSet>& hyperplanes() {
  static const std::vector<PointSet> hs = enumerate_hyperplanes(grid());
  return hs;
}

PointSet h1(const char* deep) { return singular_hyperplane(grid(), Point::parse(deep)); }

std::vector<std::uint32_t> masks(const std::vector<PointSet>& hs) {
  std::vector<std::uint32_t> out;
  for (PointSet h : hs) out.push_back(h.mask());
  return out;
}

}  // namespace

TEST(Enumeration, Yields255DistinctHyperplanesInAscendingOrder) {
  const auto& hs = hyperplanes();
  ASSERT_EQ(hs.size(), 255u);
  EXPECT_TRUE(std::is_sorted(hs.begin(), hs.end()));
  EXPECT_EQ(std::set<PointSet>(hs.begin(), hs.end()).size(), 255u);
  for (PointSet h : hs) EXPECT_TRUE(is_hyperplane(grid(), h));
}

// Every subset of the 27 points is tried against the hyperplane predicate.
TEST(Enumeration, MatchesExhaustiveSubsetScan) {
  auto scanned = scan_all_hyperplanes(grid(), 1);
  EXPECT_EQ(scanned, masks(hyperplanes()));
}

TEST(Enumeration, ScanIsIndependentOfPartitioning) {
  const std::uint32_t lo = 0x3F00000, hi = 0x4000000;
  auto whole = scan_hyperplane_masks(grid(), lo, hi);
  auto left = scan_hyperplane_masks(grid(), lo, 0x3F80000);
  auto right = scan_hyperplane_masks(grid(), 0x3F80000, hi);
  left.insert(left.end(), right.begin(), right.end());
  EXPECT_EQ(whole, left);
}

TEST(VeldkampSum, ClosedOnHyperplanes) {
  const auto& hs = hyperplanes();
  std::set<PointSet> all(hs.begin(), hs.end());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    EXPECT_TRUE(vsum(hs[i], hs[i]).is_full());
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      PointSet s = vsum(hs[i], hs[j]);
      ASSERT_TRUE(all.contains(s));
      EXPECT_EQ(vsum(hs[j], hs[i]), s);
    }
  }
}

TEST(VeldkampSum, FullSetIsTheZero) {
  for (PointSet h : hyperplanes()) EXPECT_EQ(vsum(h, PointSet::full()), h);
}

TEST(Classification, TypeCountsAndSignatures) {
  struct Expected {
    int pts, lns;
    std::array<int, 4> orders;
    QuadProfile quads;
    int weight, count;
  };
  const std::map<HyperplaneType, Expected> expected = {
      {HyperplaneType::H1, {19, 15, {0, 0, 12, 7}, {3, 6, 0}, 1, 27}},
      {HyperplaneType::H2, {15, 9, {0, 6, 6, 3}, {1, 6, 2}, 2, 54}},
      {HyperplaneType::H3, {13, 6, {1, 6, 6, 0}, {0, 6, 3}, 2, 108}},
      {HyperplaneType::H4, {11, 3, {4, 6, 0, 1}, {0, 3, 6}, 3, 54}},
      {HyperplaneType::H5, {9, 0, {9, 0, 0, 0}, {0, 0, 9}, 3, 12}},
  };
  std::map<HyperplaneType, int> counts;
  for (PointSet h : hyperplanes()) {
    ClassSignature s = classify(grid(), h);
    const Expected& e = expected.at(s.type);
    EXPECT_EQ(s.n_points, e.pts);
    EXPECT_EQ(s.n_lines, e.lns);
    EXPECT_EQ(s.order_profile, e.orders);
    EXPECT_EQ(s.quad_profile, e.quads);
    EXPECT_EQ(s.weight, e.weight);
    ++counts[s.type];
  }
  for (const auto& [t, e] : expected) EXPECT_EQ(counts[t], e.count) << to_string(t);
}

// Weights from a breadth-first search over sums of singular hyperplanes,
// independent of the library's bounded search.
TEST(Classification, WeightsAgreeWithSumSearch) {
  std::map<std::uint32_t, int> level{{PointSet::full().mask(), 0}};
  std::vector<std::uint32_t> frontier{PointSet::full().mask()};
  for (int k = 1; !frontier.empty(); ++k) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t v : frontier)
      for (int x = 0; x < kNumPoints; ++x) {
        std::uint32_t w = vsum(PointSet(v), h1(Point(x).label().c_str())).mask();
        if (level.emplace(w, k).second) next.push_back(w);
      }
    frontier = next;
  }
  EXPECT_EQ(level.size(), 256u);
  for (PointSet h : hyperplanes()) EXPECT_EQ(weight(grid(), h), level.at(h.mask())) << h.to_string();
}

TEST(Classification, SingularHyperplaneShape) {
  PointSet h = h1("000");
  EXPECT_EQ(h, grid().ball(Point(0), 2));
  ClassSignature s = classify(grid(), h);
  EXPECT_EQ(s.type, HyperplaneType::H1);
  EXPECT_EQ(point_order(grid(), h, Point::parse("000")), 3);
  EXPECT_THROW(point_order(grid(), h, Point::parse("111")), HyperplaneError);
}

TEST(Recipes, SumsOfSingularHyperplanesByDeepDistance) {
  const Geometry& g = grid();
  for (int x = 0; x < kNumPoints; ++x)
    for (int y = 0; y < kNumPoints; ++y) {
      if (x == y) continue;
      PointSet s = vsum(h1(Point(x).label().c_str()), h1(Point(y).label().c_str()));
      HyperplaneType t = classify(g, s).type;
      switch (g.distance(Point(x), Point(y))) {
        case 1: EXPECT_EQ(t, HyperplaneType::H1); break;
        case 2: EXPECT_EQ(t, HyperplaneType::H2); break;
        case 3: EXPECT_EQ(t, HyperplaneType::H3); break;
      }
    }
}

TEST(Recipes, ThreeSingularHyperplanes) {
  const Geometry& g = grid();
  // Two deeps at distance 2, the third opposite to both.
  PointSet h4 = vsum(vsum(h1("000"), h1("011")), h1("122"));
  EXPECT_EQ(classify(g, h4).type, HyperplaneType::H4);
  // Deeps pairwise at distance 3.
  PointSet h5 = vsum(vsum(h1("000"), h1("111")), h1("222"));
  EXPECT_EQ(classify(g, h5).type, HyperplaneType::H5);
}

TEST(Recipes, DigitSumOvoid) {
  PointSet ovoid;
  for (int i = 0; i < kNumPoints; ++i) {
    auto d = Point(i).digits();
    if ((d[0] + d[1] + d[2]) % 3 == 0) ovoid.insert(Point(i));
  }
  EXPECT_EQ(classify(grid(), ovoid).type, HyperplaneType::H5);
}

TEST(Properties, OvoidsArePairwiseNonCollinear) {
  for (PointSet h : hyperplanes()) {
    if (h.size() != 9) continue;
    for (Point a : h)
      for (Point b : h)
        if (a != b) EXPECT_FALSE(grid().collinear(a, b));
  }
}

TEST(Properties, EveryLineMeetsEveryHyperplane) {
  for (PointSet h : hyperplanes())
    for (const Line& l : grid().lines()) {
      int n = (h & l.mask).size();
      EXPECT_TRUE(n == 1 || n == 3);
    }
}

TEST(Properties, QuadTypesPartitionTheNineQuads) {
  for (PointSet h : hyperplanes()) {
    ClassSignature s = classify(grid(), h);
    EXPECT_EQ(s.quad_profile.deep + s.quad_profile.singular + s.quad_profile.ovoidal, 9);
    int total = 0;
    for (int o = 0; o < 4; ++o) total += s.order_profile[o];
    EXPECT_EQ(total, s.n_points);
  }
}

TEST(Errors, ClassifyRejectsNonHyperplanes) {
  EXPECT_THROW(classify(grid(), grid().perp(Point(0))), HyperplaneError);
  EXPECT_THROW(classify(grid(), PointSet::full()), HyperplaneError);
}
