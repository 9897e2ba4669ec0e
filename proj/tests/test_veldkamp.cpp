#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "gray27/model.hpp"

using namespace gray27;

namespace {

const Model& model() {
  static const Model m = build_model();
  return m;
}

PointSet points(std::initializer_list<const char*> labels) {
  PointSet s;
  for (const char* l : labels) s.insert(Point::parse(l));
  return s;
}

PointSet core_of_type(int t) {
  const Model& m = model();
  return m.space.line(m.classification.representative(t)).core;
}

}  // namespace

TEST(Space, LineCountAndIncidence) {
  const Model& m = model();
  ASSERT_EQ(m.space.size(), 10795u);
  std::array<int, kNumHyperplanes> per_point{};
  for (const auto& l : m.space.lines()) {
    EXPECT_TRUE(std::is_sorted(l.members.begin(), l.members.end()));
    for (int x : l.members) ++per_point[x];
  }
  for (int n : per_point) EXPECT_EQ(n, 127);
}

TEST(Space, LineAxiomOnEveryLine) {
  const Model& m = model();
  for (const auto& l : m.space.lines()) {
    PointSet a = m.catalog[l.members[0]].points, b = m.catalog[l.members[1]].points,
             c = m.catalog[l.members[2]].points;
    EXPECT_EQ(vsum(a, b), c);
    EXPECT_EQ(a & b, l.core);
    EXPECT_EQ(a & c, l.core);
    EXPECT_EQ(b & c, l.core);
  }
}

TEST(Space, LineThroughIsConsistent) {
  const Model& m = model();
  for (int i = 0; i < static_cast<int>(m.space.size()); ++i) {
    const auto& mem = m.space.line(i).members;
    EXPECT_EQ(m.space.line_through(mem[0], mem[1]), i);
    EXPECT_EQ(m.space.line_through(mem[2], mem[0]), i);
  }
  EXPECT_THROW(m.space.line_through(3, 3), VeldkampError);
}

TEST(Space, CoreRejectsNonLines) {
  const Model& m = model();
  EXPECT_THROW(core(m.catalog[0].points, m.catalog[1].points, m.catalog[2].points), VeldkampError);
}

TEST(Coordinates, BijectiveAndAdditive) {
  const Model& m = model();
  const Coordinates& co = m.coordinates;
  std::set<int> seen(co.of.begin(), co.of.end());
  EXPECT_EQ(seen.size(), 255u);
  EXPECT_FALSE(seen.contains(0));
  for (int i = 0; i < kNumHyperplanes; ++i) EXPECT_EQ(co.point_at[co.of[i]], i);
  for (int a = 0; a < kNumHyperplanes; ++a)
    for (int b = a + 1; b < kNumHyperplanes; ++b)
      EXPECT_EQ(co.of[m.catalog.index_of(vsum(m.catalog[a].points, m.catalog[b].points))], co.of[a] ^ co.of[b]);
}

TEST(LineTypes, CardinalitiesPerType) {
  const std::array<int, 41> expected = {27,  162, 108, 81,  648, 18,  324, 324, 324, 18,  108, 648, 648, 27,
                                        162, 324, 324, 162, 324, 108, 108, 648, 108, 648, 216, 108, 648, 36,
                                        162, 648, 324, 324, 648, 324, 216, 324, 54,  54,  216, 108, 4};
  const auto& cls = model().classification;
  int total = 0;
  for (int t = 1; t <= 41; ++t) {
    EXPECT_EQ(cls.cardinality(t), expected[t - 1]) << "type " << t;
    total += cls.cardinality(t);
  }
  EXPECT_EQ(total, 10795);
}

TEST(LineTypes, CardinalityStatistics) {
  std::map<int, int> how_many;
  for (int t = 1; t <= 41; ++t) ++how_many[model().classification.cardinality(t)];
  EXPECT_EQ(how_many[4], 1);
  EXPECT_EQ(how_many[36], 1);
  EXPECT_EQ(how_many[81], 1);
  EXPECT_EQ(how_many[324], 10);
  EXPECT_EQ(how_many[648], 8);
}

TEST(LineTypes, OrbitsAreTheTypes) {
  const Model& m = model();
  const auto& cls = m.classification;
  // Lines of one type form a single orbit of the induced action.
  for (int t = 1; t <= 41; ++t) {
    std::set<int> orbit;
    int rep = cls.representative(t);
    for (const auto& act : m.catalog.induced_action()) orbit.insert(image_of_line(m.space, act, rep));
    EXPECT_EQ(orbit, std::set<int>(cls.lines_of_type[t].begin(), cls.lines_of_type[t].end())) << "type " << t;
  }
  for (const auto& l : m.space.lines()) EXPECT_EQ(l.profile, cls.profile_of_type[l.type_id]);
}

TEST(LineTypes, CompositionFacts) {
  const auto& cls = model().classification;
  std::vector<int> homogeneous;
  int heterogeneous = 0;
  std::set<std::set<int>> heterogeneous_sets;
  std::array<int, 5> types_containing{};
  for (int t = 1; t <= 41; ++t) {
    const Composition& c = cls.profile_of_type[t].composition;
    int distinct = 0;
    std::set<int> present;
    for (int i = 0; i < 5; ++i)
      if (c[i] > 0) {
        ++distinct;
        present.insert(i);
        ++types_containing[i];
      }
    if (distinct == 1) homogeneous.push_back(t);
    if (distinct == 3) {
      ++heterogeneous;
      heterogeneous_sets.insert(present);
    }
  }
  EXPECT_EQ(homogeneous, (std::vector<int>{1, 6, 10, 11, 23, 24, 28, 37, 41}));
  EXPECT_EQ(heterogeneous, 9);
  // Types 22 and 27 share H2 H3 H4; H1 H2 H5 and H2 H4 H5 never occur.
  EXPECT_EQ(heterogeneous_sets.size(), 8u);
  EXPECT_FALSE(heterogeneous_sets.contains({0, 1, 4}));
  EXPECT_FALSE(heterogeneous_sets.contains({1, 3, 4}));
  EXPECT_EQ(types_containing, (std::array<int, 5>{13, 20, 23, 17, 9}));
}

TEST(LineTypes, CompositionSummary) {
  const std::array<std::array<int, 5>, 5> expected = {{{3, 4, 6, 5, 2},
                                                        {4, 7, 9, 6, 3},
                                                        {6, 9, 12, 8, 4},
                                                        {5, 6, 8, 8, 3},
                                                        {2, 3, 4, 3, 2}}};
  EXPECT_EQ(composition_summary(model().classification), expected);
  EXPECT_EQ(composition_summary(), expected);
}

TEST(LineTypes, RefinementsThatSeparateRows) {
  const auto& p = model().classification.profile_of_type;
  EXPECT_EQ(p[16].isolated_pair_distance, 2);
  EXPECT_EQ(p[17].isolated_pair_distance, 3);
  EXPECT_EQ(p[35].four_point_split, FourPointSplit::ThreeOne);
  EXPECT_EQ(p[36].four_point_split, FourPointSplit::TwoTwo);
  EXPECT_EQ(p[8].arrangement, LineArrangement::Concurrent);
  EXPECT_EQ(p[10].arrangement, LineArrangement::Parallel);
  EXPECT_EQ(p[9].arrangement, LineArrangement::Mixed);
  EXPECT_EQ(p[7].n_core_lines, 4);
  EXPECT_EQ(p[9].n_core_lines, 3);
}

// The reference notation for type 32 reads 5_(1); the computed coplanarity
// count is 2, and the only disagreement with the reference table.
TEST(LineTypes, NotationMismatchesAreRecorded) {
  const auto& mm = model().classification.notation_mismatches;
  ASSERT_EQ(mm.size(), 1u);
  EXPECT_EQ(mm[0].type_id, 32);
  EXPECT_EQ(mm[0].kind, Subscript::Coplanarity);
  EXPECT_EQ(mm[0].expected, 1);
  EXPECT_EQ(mm[0].actual, 2);
}

// The core behind the type-32 count: 000 and 220 share a quad with every
// other core point, 110 does not share one with 022 or 202.
TEST(LineTypes, Type32CoplanarityWitness) {
  const Model& m = model();
  PointSet c = points({"000", "022", "110", "202", "220"});
  auto lines = lines_with_core(m.space, c);
  ASSERT_FALSE(lines.empty());
  EXPECT_EQ(m.space.line(lines.front()).type_id, 32);
  EXPECT_EQ(m.space.line(lines.front()).profile.coplanarity_count, 2);
}

TEST(Witness, Type24TripleOfH3s) {
  const Model& m = model();
  const Geometry& g = m.geometry;
  auto h3 = [&](const char* x, const char* y) { return h3_with_axis(g, Point::parse(x), Point::parse(y)); };
  PointSet A = h3("000", "222"), B = h3("102", "211"), C = h3("001", "210");
  EXPECT_EQ(nucleus(g, A), Point::parse("111"));
  EXPECT_EQ(nucleus(g, B), Point::parse("020"));
  EXPECT_EQ(nucleus(g, C), Point::parse("122"));
  EXPECT_EQ(vsum(A, B), C);

  int a = m.catalog.index_of(A), b = m.catalog.index_of(B), c = m.catalog.index_of(C);
  const auto& line = m.space.line(m.space.line_through(a, b));
  EXPECT_EQ(line.core, points({"012", "020", "111", "200", "201", "202"}));
  EXPECT_EQ(line.type_id, 24);

  std::set<std::set<OrderedPair>> got;
  for (const auto& k : ordered_pair_classes(m.catalog, line.members)) got.insert({k.begin(), k.end()});
  std::set<std::set<OrderedPair>> want = {{{a, b}, {b, a}}, {{a, c}, {b, c}}, {{c, a}, {c, b}}};
  EXPECT_EQ(got, want);
}

TEST(Witness, NucleusAndAxisOfEveryH3) {
  const Model& m = model();
  const Geometry& g = m.geometry;
  int n = 0;
  for (const auto& h : m.catalog) {
    if (h.signature.type != HyperplaneType::H3) {
      EXPECT_THROW(axis(g, h.points), VeldkampError);
      continue;
    }
    ++n;
    auto [x, y] = axis(g, h.points);
    EXPECT_EQ(g.distance(x, y), 3);
    EXPECT_EQ(h3_with_axis(g, x, y), h.points);
    Point nu = nucleus(g, h.points);
    EXPECT_EQ(point_order(g, h.points, nu), 0);
  }
  EXPECT_EQ(n, 108);
  EXPECT_THROW(h3_with_axis(g, Point::parse("000"), Point::parse("011")), VeldkampError);
}

TEST(PairOrbits, MultipleDoubleCosetsPerType) {
  const Model& m = model();
  PairOrbitTally tally = pair_orbit_tally(m.space, m.classification, m.catalog);
  std::map<std::tuple<int, int, int>, int> above_one;
  for (int t = 1; t <= 41; ++t)
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        if (tally.count[t][a][b] > 1) above_one[{t, a + 1, b + 1}] = tally.count[t][a][b];
  std::map<std::tuple<int, int, int>, int> expected = {
      {{24, 3, 3}, 3}, {{33, 3, 3}, 2}, {{33, 3, 4}, 2}, {{33, 4, 3}, 2},
      {{35, 3, 4}, 2}, {{35, 4, 3}, 2}, {{35, 4, 4}, 2},
  };
  EXPECT_EQ(above_one, expected);
}

TEST(PairOrbits, CellTotalsGiveOrderedPairOrbits) {
  const Model& m = model();
  PairOrbitTally tally = pair_orbit_tally(m.space, m.classification, m.catalog);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      EXPECT_EQ(tally.cell_total(a, b),
                ordered_pair_orbit_count(m.group, m.catalog, kHyperplaneTypes[a], kHyperplaneTypes[b], a == b))
          << a << "," << b;
}

TEST(CoreReconstruction, AmbiguousCores) {
  const Model& m = model();
  for (int t : {6, 23, 37, 41}) EXPECT_GT(lines_with_core(m.space, core_of_type(t)).size(), 1u) << "type " << t;
  auto empty = lines_with_core(m.space, PointSet{});
  EXPECT_EQ(empty.size(), 4u);
  for (int l : empty) EXPECT_EQ(m.space.line(l).type_id, 41);
  EXPECT_EQ(lines_with_core(m.space, core_of_type(1)).size(), 1u);
}

// Types whose core does not determine the line.
TEST(CoreReconstruction, ExactlyFourAmbiguousTypes) {
  const Model& m = model();
  std::map<PointSet, int> lines_per_core;
  for (const auto& l : m.space.lines()) ++lines_per_core[l.core];
  std::set<int> ambiguous;
  for (const auto& l : m.space.lines())
    if (lines_per_core[l.core] > 1) ambiguous.insert(l.type_id);
  EXPECT_EQ(ambiguous, (std::set<int>{6, 23, 37, 41}));
}

TEST(Notation, ReferenceRows) {
  EXPECT_EQ(core_points_notation(line_type_row(8)), "9_(2)");
  EXPECT_EQ(core_points_notation(line_type_row(25)), "6_[3]");
  EXPECT_EQ(core_points_notation(line_type_row(35)), "4_(3:1)");
  EXPECT_EQ(core_lines_notation(line_type_row(22)), "2c");
  EXPECT_EQ(core_lines_notation(line_type_row(23)), "2p");
  EXPECT_THROW(line_type_row(42), VeldkampError);
}
