#pragma once

// The Veldkamp space of the grid: 255 hyperplanes as points, 10,795 lines
// {A, B, A+B}, line cores and their refinements, the 41 line types, GF(2)
// coordinates, and the invariant symplectic form.

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gray27/catalog.hpp"
#include "gray27/gf2.hpp"

namespace gray27 {

inline constexpr int kNumVeldkampLines = 10795;
inline constexpr int kNumLineTypes = 41;
inline constexpr int kVeldkampDimension = 8;

class VeldkampError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LineArrangement { None, Single, Concurrent, Parallel, Mixed };
enum class FourPointSplit { ThreeOne, TwoTwo };

inline std::string to_string(LineArrangement a) {
  switch (a) {
    case LineArrangement::None: return "none";
    case LineArrangement::Single: return "single";
    case LineArrangement::Concurrent: return "concurrent";
    case LineArrangement::Parallel: return "parallel";
    case LineArrangement::Mixed: return "mixed";
  }
  return "?";
}

inline std::string to_string(FourPointSplit s) { return s == FourPointSplit::ThreeOne ? "3:1" : "2:2"; }

// Multiplicity of H1..H5 among the three members of a line.
using Composition = std::array<int, 5>;

struct CoreProfile {
  int n_points = 0;
  int n_core_lines = 0;
  LineArrangement arrangement = LineArrangement::None;
  Composition composition{};
  // Distance between the two isolated core points, when there are exactly two.
  std::optional<int> isolated_pair_distance;
  // Quads meeting the core in three pairwise non-collinear points.
  int ovoid_quad_count = 0;
  // For line-free 5-point cores: points coplanar with all four others.
  std::optional<int> coplanarity_count;
  // For 4-point cores of composition H3 H4 H4.
  std::optional<FourPointSplit> four_point_split;

  friend auto operator<=>(const CoreProfile&, const CoreProfile&) = default;
};

inline std::string describe(const CoreProfile& p) {
  std::string s = std::to_string(p.n_points) + " points, " + std::to_string(p.n_core_lines) + " lines (" +
                  to_string(p.arrangement) + "), composition";
  for (int i = 0; i < 5; ++i) s += " " + std::to_string(p.composition[i]);
  if (p.isolated_pair_distance) s += ", isolated pair at distance " + std::to_string(*p.isolated_pair_distance);
  s += ", ovoid quads " + std::to_string(p.ovoid_quad_count);
  if (p.coplanarity_count) s += ", coplanarity " + std::to_string(*p.coplanarity_count);
  if (p.four_point_split) s += ", split " + to_string(*p.four_point_split);
  return s;
}

struct VeldkampLine {
  std::array<int, 3> members{};  // ascending catalog indices
  PointSet core;
  CoreProfile profile;
  int type_id = 0;  // 1..41 once classified
};

// Common intersection of three hyperplanes; throws unless every pairwise
// intersection equals it.
inline PointSet core(PointSet a, PointSet b, PointSet c) {
  PointSet all = a & b & c;
  if ((a & b) != all || (a & c) != all || (b & c) != all)
    throw VeldkampError("pairwise intersections of a Veldkamp line differ from the triple intersection");
  return all;
}

inline CoreProfile core_profile(const Geometry& g, const HyperplaneCatalog& cat, const std::array<int, 3>& members) {
  PointSet c = core(cat[members[0]].points, cat[members[1]].points, cat[members[2]].points);
  CoreProfile prof;
  prof.n_points = c.size();
  for (int m : members) ++prof.composition[type_index(cat.type_of(m))];

  std::vector<PointSet> lines;
  PointSet covered;
  for (const Line& l : g.lines())
    if (c.contains(l.mask)) {
      lines.push_back(l.mask);
      covered = covered | l.mask;
    }
  prof.n_core_lines = static_cast<int>(lines.size());
  if (lines.empty()) {
    prof.arrangement = LineArrangement::None;
  } else if (lines.size() == 1) {
    prof.arrangement = LineArrangement::Single;
  } else {
    bool disjoint = true;
    PointSet common = PointSet::full();
    for (std::size_t i = 0; i < lines.size(); ++i) {
      common = common & lines[i];
      for (std::size_t j = i + 1; j < lines.size(); ++j)
        if (!(lines[i] & lines[j]).empty()) disjoint = false;
    }
    prof.arrangement = disjoint          ? LineArrangement::Parallel
                       : !common.empty() ? LineArrangement::Concurrent
                                         : LineArrangement::Mixed;
  }

  PointSet isolated = c - covered;
  if (isolated.size() == 2) {
    auto pts = isolated.points();
    prof.isolated_pair_distance = g.distance(pts[0], pts[1]);
  }

  for (const Quad& q : g.quads()) {
    PointSet meet = q.points & c;
    if (meet.size() != 3) continue;
    bool independent = true;
    for (Point a : meet)
      for (Point b : meet)
        if (g.collinear(a, b)) independent = false;
    prof.ovoid_quad_count += independent ? 1 : 0;
  }

  if (prof.n_points == 5 && prof.n_core_lines == 0) {
    int n = 0;
    for (Point p : c) {
      bool all = true;
      for (Point q : c)
        if (!g.coplanar(p, q)) all = false;
      n += all ? 1 : 0;
    }
    prof.coplanarity_count = n;
  }

  if (prof.n_points == 4 && prof.composition == Composition{0, 0, 1, 2, 0}) {
    // 3:1 - one point at distance 3 from the other three.
    // 2:2 - a single pair at distance 3, the other two points at distance 2
    //       from everything.
    int far = 0, far_pairs = 0;
    for (Point p : c) {
      int n = 0;
      for (Point q : c) n += (q != p && g.distance(p, q) == 3) ? 1 : 0;
      far += n == 3 ? 1 : 0;
      far_pairs += n;
    }
    far_pairs /= 2;
    if (far == 1 && far_pairs == 3) prof.four_point_split = FourPointSplit::ThreeOne;
    else if (far_pairs == 1) prof.four_point_split = FourPointSplit::TwoTwo;
    else throw VeldkampError("4-point core fits neither the 3:1 nor the 2:2 pattern");
  }
  return prof;
}

// Veldkamp lines of the grid, indexed so that the line through any two
// distinct points is an O(1) lookup.
class VeldkampSpace {
 public:
  const std::vector<VeldkampLine>& lines() const { return lines_; }
  const VeldkampLine& line(int i) const { return lines_.at(i); }
  std::size_t size() const { return lines_.size(); }

  int line_through(int a, int b) const {
    if (a == b) throw VeldkampError("two distinct points are needed to determine a Veldkamp line");
    return line_of_pair_[a * kNumHyperplanes + b];
  }

  void set_type(int line, int type_id) { lines_.at(line).type_id = type_id; }

  friend VeldkampSpace build_space(const Geometry& g, const HyperplaneCatalog& cat);

 private:
  std::vector<VeldkampLine> lines_;
  std::vector<std::uint16_t> line_of_pair_;
};

// Forms {a, b, a+b} for every pair, deduplicated; checks the line axiom on
// each. Lines are ordered lexicographically by member indices.
inline VeldkampSpace build_space(const Geometry& g, const HyperplaneCatalog& cat) {
  const int n = static_cast<int>(cat.size());
  if (n != kNumHyperplanes) throw VeldkampError("catalog must hold 255 hyperplanes");
  VeldkampSpace space;
  space.line_of_pair_.assign(n * n, 0xFFFF);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      PointSet s = vsum(cat[a].points, cat[b].points);
      if (s.is_full()) throw VeldkampError("Veldkamp sum of distinct hyperplanes is zero");
      int c = cat.index_of(s);
      if (c < b) continue;  // produced already from the smaller pair
      VeldkampLine line;
      line.members = {a, b, c};
      line.core = core(cat[a].points, cat[b].points, cat[c].points);
      line.profile = core_profile(g, cat, line.members);
      auto id = static_cast<std::uint16_t>(space.lines_.size());
      for (int x : line.members)
        for (int y : line.members)
          if (x != y) space.line_of_pair_[x * n + y] = id;
      space.lines_.push_back(line);
    }
  }
  if (space.lines_.size() != kNumVeldkampLines)
    throw VeldkampError("expected 10795 Veldkamp lines, found " + std::to_string(space.lines_.size()));
  return space;
}

// Basis of the hyperplane space and the coordinate vector of every point.
struct Coordinates {
  std::array<int, kVeldkampDimension> basis{};  // catalog indices
  std::vector<std::uint8_t> of;                 // catalog index -> nonzero vector
  std::array<int, 256> point_at{};              // vector -> catalog index, -1 for zero
};

// Greedy basis in catalog order; vsum becomes XOR of coordinates.
inline Coordinates coordinatize(const HyperplaneCatalog& cat, const VeldkampSpace& space) {
  // Hyperplane h corresponds to the vector complement(h) under XOR.
  auto vec = [&](int i) -> std::uint64_t { return cat[i].points.complement().mask(); };
  gf2::XorBasis basis;
  Coordinates co;
  int k = 0;
  for (int i = 0; i < static_cast<int>(cat.size()) && k < kVeldkampDimension; ++i)
    if (basis.insert(vec(i))) co.basis[k++] = i;
  if (k < kVeldkampDimension) throw VeldkampError("fewer than 8 independent hyperplanes");
  // The ninth independent vector cannot exist within 255 nonzero elements.
  if (cat.size() != (std::size_t{1} << kVeldkampDimension) - 1)
    throw VeldkampError("hyperplane count is not 2^8 - 1");

  co.point_at.fill(-1);
  co.of.resize(cat.size());
  for (int i = 0; i < static_cast<int>(cat.size()); ++i) {
    auto combo = basis.express(vec(i));
    if (!combo) throw VeldkampError("hyperplane outside the span of the basis");
    auto v = static_cast<std::uint8_t>(*combo);
    if (v == 0 || co.point_at[v] != -1) throw VeldkampError("coordinate map is not injective onto nonzero vectors");
    co.of[i] = v;
    co.point_at[v] = i;
  }
  for (const auto& l : space.lines()) {
    if ((co.of[l.members[0]] ^ co.of[l.members[1]]) != co.of[l.members[2]])
      throw VeldkampError("Veldkamp line does not map to a projective line");
  }
  return co;
}

// ---------------------------------------------------------------------------
// Line types

enum class Mark { None, Concurrent, Parallel };
enum class Subscript { None, IsolatedDistance, OvoidQuads, Coplanarity, Split };

struct LineTypeRow {
  int type_id;
  int core_points;
  int core_lines;
  Mark mark;
  Subscript subscript;
  int subscript_value;  // for Split: 31 means 3:1, 22 means 2:2
  Composition composition;
  int cardinality;
};

// Reference rows for the 41 line types. A row constrains the arrangement and
// refinement fields only where it carries a mark or a subscript.
inline constexpr std::array<LineTypeRow, kNumLineTypes> kLineTypeRows = {{
    {1, 15, 11, Mark::None, Subscript::None, 0, {3, 0, 0, 0, 0}, 27},
    {2, 13, 8, Mark::None, Subscript::None, 0, {2, 1, 0, 0, 0}, 162},
    {3, 12, 6, Mark::None, Subscript::None, 0, {2, 0, 1, 0, 0}, 108},
    {4, 11, 7, Mark::None, Subscript::None, 0, {1, 2, 0, 0, 0}, 81},
    {5, 10, 4, Mark::None, Subscript::None, 0, {1, 1, 1, 0, 0}, 648},
    {6, 9, 6, Mark::None, Subscript::None, 0, {0, 3, 0, 0, 0}, 18},
    {7, 9, 4, Mark::None, Subscript::None, 0, {1, 0, 2, 0, 0}, 324},
    {8, 9, 3, Mark::Concurrent, Subscript::IsolatedDistance, 2, {1, 1, 0, 1, 0}, 324},
    {9, 9, 3, Mark::None, Subscript::None, 0, {1, 0, 2, 0, 0}, 324},
    {10, 9, 3, Mark::Parallel, Subscript::None, 0, {0, 3, 0, 0, 0}, 18},
    {11, 9, 3, Mark::Concurrent, Subscript::IsolatedDistance, 3, {0, 3, 0, 0, 0}, 108},
    {12, 8, 3, Mark::None, Subscript::None, 0, {0, 2, 1, 0, 0}, 648},
    {13, 8, 2, Mark::None, Subscript::None, 0, {1, 0, 1, 1, 0}, 648},
    {14, 7, 3, Mark::None, Subscript::None, 0, {1, 0, 0, 2, 0}, 27},
    {15, 7, 2, Mark::Parallel, Subscript::None, 0, {0, 1, 2, 0, 0}, 162},
    {16, 7, 2, Mark::Concurrent, Subscript::IsolatedDistance, 2, {0, 1, 2, 0, 0}, 324},
    {17, 7, 2, Mark::Concurrent, Subscript::IsolatedDistance, 3, {0, 1, 2, 0, 0}, 324},
    {18, 7, 1, Mark::None, Subscript::OvoidQuads, 2, {0, 2, 0, 1, 0}, 162},
    {19, 7, 1, Mark::None, Subscript::OvoidQuads, 1, {0, 1, 2, 0, 0}, 324},
    {20, 7, 0, Mark::None, Subscript::None, 0, {1, 0, 1, 0, 1}, 108},
    {21, 7, 0, Mark::None, Subscript::None, 0, {1, 0, 0, 2, 0}, 108},
    {22, 6, 2, Mark::Concurrent, Subscript::None, 0, {0, 1, 1, 1, 0}, 648},
    {23, 6, 2, Mark::Parallel, Subscript::None, 0, {0, 0, 3, 0, 0}, 108},
    {24, 6, 1, Mark::None, Subscript::None, 0, {0, 0, 3, 0, 0}, 648},
    {25, 6, 0, Mark::None, Subscript::OvoidQuads, 3, {1, 0, 0, 1, 1}, 216},
    {26, 6, 0, Mark::None, Subscript::OvoidQuads, 2, {0, 2, 0, 0, 1}, 108},
    {27, 6, 0, Mark::None, Subscript::OvoidQuads, 1, {0, 1, 1, 1, 0}, 648},
    {28, 6, 0, Mark::None, Subscript::OvoidQuads, 0, {0, 0, 3, 0, 0}, 36},
    {29, 5, 1, Mark::None, Subscript::OvoidQuads, 1, {0, 1, 0, 2, 0}, 162},
    {30, 5, 1, Mark::None, Subscript::OvoidQuads, 0, {0, 0, 2, 1, 0}, 648},
    {31, 5, 0, Mark::None, Subscript::Coplanarity, 2, {0, 1, 1, 0, 1}, 324},
    {32, 5, 0, Mark::None, Subscript::Coplanarity, 1, {0, 1, 0, 2, 0}, 324},
    {33, 5, 0, Mark::None, Subscript::Coplanarity, 0, {0, 0, 2, 1, 0}, 648},
    {34, 4, 0, Mark::None, Subscript::None, 0, {0, 0, 2, 0, 1}, 324},
    {35, 4, 0, Mark::None, Subscript::Split, 31, {0, 0, 1, 2, 0}, 216},
    {36, 4, 0, Mark::None, Subscript::Split, 22, {0, 0, 1, 2, 0}, 324},
    {37, 3, 1, Mark::None, Subscript::None, 0, {0, 0, 0, 3, 0}, 54},
    {38, 3, 0, Mark::None, Subscript::OvoidQuads, 1, {0, 1, 0, 0, 2}, 54},
    {39, 3, 0, Mark::None, Subscript::OvoidQuads, 0, {0, 0, 1, 1, 1}, 216},
    {40, 2, 0, Mark::None, Subscript::None, 0, {0, 0, 0, 2, 1}, 108},
    {41, 0, 0, Mark::None, Subscript::None, 0, {0, 0, 0, 0, 3}, 4},
}};

inline const LineTypeRow& line_type_row(int type_id) {
  if (type_id < 1 || type_id > kNumLineTypes) throw VeldkampError("line type id out of range");
  return kLineTypeRows[type_id - 1];
}

// Core column as written in the reference table, e.g. "7_(2)" or "6_[1]".
inline std::string core_points_notation(const LineTypeRow& r) {
  std::string s = std::to_string(r.core_points);
  switch (r.subscript) {
    case Subscript::None: break;
    case Subscript::IsolatedDistance:
    case Subscript::Coplanarity: s += "_(" + std::to_string(r.subscript_value) + ")"; break;
    case Subscript::OvoidQuads: s += "_[" + std::to_string(r.subscript_value) + "]"; break;
    case Subscript::Split: s += r.subscript_value == 31 ? "_(3:1)" : "_(2:2)"; break;
  }
  return s;
}

inline std::string core_lines_notation(const LineTypeRow& r) {
  std::string s = std::to_string(r.core_lines);
  if (r.mark == Mark::Concurrent) s += "c";
  if (r.mark == Mark::Parallel) s += "p";
  return s;
}

// Points, lines, composition and the c/p mark.
inline bool matches_coarse(const LineTypeRow& r, const CoreProfile& p) {
  if (r.core_points != p.n_points || r.core_lines != p.n_core_lines || r.composition != p.composition) return false;
  if (r.mark == Mark::Concurrent && p.arrangement != LineArrangement::Concurrent) return false;
  if (r.mark == Mark::Parallel && p.arrangement != LineArrangement::Parallel) return false;
  return true;
}

// Value of the refinement a row is subscripted with, computed from a profile
// and encoded like LineTypeRow::subscript_value.
inline std::optional<int> subscript_of(Subscript kind, const CoreProfile& p) {
  switch (kind) {
    case Subscript::None: return std::nullopt;
    case Subscript::IsolatedDistance: return p.isolated_pair_distance;
    case Subscript::OvoidQuads: return p.ovoid_quad_count;
    case Subscript::Coplanarity: return p.coplanarity_count;
    case Subscript::Split:
      if (!p.four_point_split) return std::nullopt;
      return *p.four_point_split == FourPointSplit::ThreeOne ? 31 : 22;
  }
  return std::nullopt;
}

inline bool matches(const LineTypeRow& r, const CoreProfile& p) {
  return matches_coarse(r, p) && (r.subscript == Subscript::None || subscript_of(r.subscript, p) == r.subscript_value);
}

// A notated refinement whose computed value differs from the reference row.
struct NotationMismatch {
  int type_id = 0;
  Subscript kind = Subscript::None;
  int expected = 0;
  std::optional<int> actual;
};

struct LineClassification {
  std::vector<int> type_of_line;                                  // line index -> 1..41
  std::array<std::vector<int>, kNumLineTypes + 1> lines_of_type;  // [0] unused
  std::array<CoreProfile, kNumLineTypes + 1> profile_of_type;
  std::vector<NotationMismatch> notation_mismatches;

  int cardinality(int type_id) const { return static_cast<int>(lines_of_type.at(type_id).size()); }
  int representative(int type_id) const { return lines_of_type.at(type_id).front(); }
};

// Image of a line under one element of the induced action.
inline int image_of_line(const VeldkampSpace& space, const IndexPermutation& act, int line) {
  const auto& m = space.line(line).members;
  return space.line_through(act[m[0]], act[m[1]]);
}

// Reference row for a profile: the unique row agreeing on the coarse key, or
// when several do, the unique one whose subscript also agrees.
inline const LineTypeRow& match_row(const CoreProfile& prof) {
  std::vector<const LineTypeRow*> coarse;
  for (const auto& row : kLineTypeRows)
    if (matches_coarse(row, prof)) coarse.push_back(&row);
  if (coarse.size() > 1) std::erase_if(coarse, [&](const LineTypeRow* r) { return !matches(*r, prof); });
  if (coarse.empty()) throw VeldkampError("line orbit matches no line type: " + describe(prof));
  if (coarse.size() > 1) throw VeldkampError("line orbit matches more than one line type: " + describe(prof));
  return *coarse.front();
}

// G-orbits on lines, each matched to exactly one reference row. Assigns the
// type ids into the space. Refinements that disagree with a row's notation
// are collected in notation_mismatches rather than rejected.
inline LineClassification classify_lines(VeldkampSpace& space, const HyperplaneCatalog& cat) {
  const auto& action = cat.induced_action();
  const int n = static_cast<int>(space.size());
  std::vector<int> orbit_id(n, -1);
  std::vector<std::vector<int>> orbits;
  for (int l = 0; l < n; ++l) {
    if (orbit_id[l] >= 0) continue;
    int id = static_cast<int>(orbits.size());
    orbits.emplace_back();
    for (const auto& act : action) {
      int img = image_of_line(space, act, l);
      if (orbit_id[img] < 0) {
        orbit_id[img] = id;
        orbits.back().push_back(img);
      }
    }
  }
  if (orbits.size() != kNumLineTypes)
    throw VeldkampError("expected 41 line orbits, found " + std::to_string(orbits.size()));

  LineClassification out;
  out.type_of_line.assign(n, 0);
  std::vector<CoreProfile> seen_profiles;
  for (auto& orb : orbits) {
    std::sort(orb.begin(), orb.end());
    const CoreProfile& prof = space.line(orb.front()).profile;
    for (int l : orb)
      if (space.line(l).profile != prof) throw VeldkampError("core profile is not constant on a line orbit");
    if (std::find(seen_profiles.begin(), seen_profiles.end(), prof) != seen_profiles.end())
      throw VeldkampError("two line orbits share the same core profile");
    seen_profiles.push_back(prof);

    const LineTypeRow& row = match_row(prof);
    const int type_id = row.type_id;
    if (!out.lines_of_type[type_id].empty()) throw VeldkampError("two line orbits match the same line type");
    if (static_cast<int>(orb.size()) != row.cardinality)
      throw VeldkampError("line type " + std::to_string(type_id) + " has " + std::to_string(orb.size()) +
                          " lines, expected " + std::to_string(row.cardinality));
    if (row.subscript != Subscript::None && !matches(row, prof))
      out.notation_mismatches.push_back({type_id, row.subscript, row.subscript_value, subscript_of(row.subscript, prof)});
    out.lines_of_type[type_id] = orb;
    out.profile_of_type[type_id] = prof;
    for (int l : orb) {
      out.type_of_line[l] = type_id;
      space.set_type(l, type_id);
    }
  }
  std::sort(out.notation_mismatches.begin(), out.notation_mismatches.end(),
            [](const NotationMismatch& a, const NotationMismatch& b) { return a.type_id < b.type_id; });
  return out;
}

// Entry (i, j), i != j: line types containing both Hi and Hj. Diagonal entry
// (i, i): line types containing Hi at least twice.
inline std::array<std::array<int, 5>, 5> composition_summary() {
  std::array<std::array<int, 5>, 5> m{};
  for (const auto& row : kLineTypeRows) {
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        bool hit = i == j ? row.composition[i] >= 2 : row.composition[i] >= 1 && row.composition[j] >= 1;
        m[i][j] += hit ? 1 : 0;
      }
  }
  return m;
}

// Same summary computed from classified orbits rather than reference rows.
inline std::array<std::array<int, 5>, 5> composition_summary(const LineClassification& cls) {
  std::array<std::array<int, 5>, 5> m{};
  for (int t = 1; t <= kNumLineTypes; ++t) {
    const Composition& c = cls.profile_of_type[t].composition;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) m[i][j] += (i == j ? c[i] >= 2 : c[i] >= 1 && c[j] >= 1) ? 1 : 0;
  }
  return m;
}

// Partition of the six ordered pairs of distinct members of a line into
// G-orbits. Pairs are (catalog index, catalog index).
using OrderedPair = std::pair<int, int>;

inline std::vector<std::vector<OrderedPair>> ordered_pair_classes(const HyperplaneCatalog& cat,
                                                                  const std::array<int, 3>& members) {
  std::vector<OrderedPair> pairs;
  for (int x : members)
    for (int y : members)
      if (x != y) pairs.emplace_back(x, y);

  std::vector<int> cls(pairs.size(), -1);
  std::vector<std::vector<OrderedPair>> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = static_cast<int>(out.size());
    out.push_back({pairs[i]});
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (cls[j] >= 0) continue;
      for (const auto& act : cat.induced_action()) {
        if (act[pairs[i].first] == pairs[j].first && act[pairs[i].second] == pairs[j].second) {
          cls[j] = cls[i];
          out.back().push_back(pairs[j]);
          break;
        }
      }
    }
  }
  return out;
}

// For every line type and every ordered cell (Ha, Hb), the number of G-orbits
// on ordered pairs (A, B) of distinct members of lines of that type with A of
// type Ha and B of type Hb. Summing a cell over all types gives the double
// coset count of that cell.
struct PairOrbitTally {
  // [type_id][a][b]
  std::array<std::array<std::array<int, 5>, 5>, kNumLineTypes + 1> count{};

  int cell_total(int a, int b) const {
    int n = 0;
    for (int t = 1; t <= kNumLineTypes; ++t) n += count[t][a][b];
    return n;
  }
};

inline PairOrbitTally pair_orbit_tally(const VeldkampSpace& space, const LineClassification& cls,
                                       const HyperplaneCatalog& cat) {
  PairOrbitTally tally;
  for (int t = 1; t <= kNumLineTypes; ++t) {
    // Every orbit on ordered pairs of lines of type t meets the representative.
    for (const auto& orb : ordered_pair_classes(cat, space.line(cls.representative(t)).members)) {
      auto [x, y] = orb.front();
      ++tally.count[t][type_index(cat.type_of(x))][type_index(cat.type_of(y))];
    }
  }
  return tally;
}

// ---------------------------------------------------------------------------
// Symplectic form

// 1 when |a & b| is even, 0 when odd. Extends to the zero vector (the full
// point set) with value 0, since every hyperplane has odd size.
inline int symplectic_form(PointSet a, PointSet b) { return (a & b).size() % 2 == 0 ? 1 : 0; }

// Bilinear form on GF(2)^8: bit j of row i is M[i][j].
using FormMatrix = std::array<std::uint8_t, kVeldkampDimension>;

inline int evaluate(const FormMatrix& m, std::uint8_t u, std::uint8_t v) {
  int s = 0;
  for (int i = 0; i < kVeldkampDimension; ++i)
    if ((u >> i) & 1) s ^= std::popcount(static_cast<unsigned>(m[i] & v)) & 1;
  return s;
}

inline FormMatrix form_matrix(const HyperplaneCatalog& cat, const Coordinates& co) {
  FormMatrix m{};
  for (int i = 0; i < kVeldkampDimension; ++i)
    for (int j = 0; j < kVeldkampDimension; ++j)
      if (symplectic_form(cat[co.basis[i]].points, cat[co.basis[j]].points))
        m[i] |= static_cast<std::uint8_t>(1U << j);
  return m;
}

inline int form_rank(const FormMatrix& m) { return gf2::rank({m.begin(), m.end()}); }

// Matrix of the coordinate map induced by a permutation: column k is the
// coordinate vector of the image of basis element k.
inline std::array<std::uint8_t, kVeldkampDimension> coordinate_matrix_columns(const HyperplaneCatalog& cat,
                                                                            const Coordinates& co,
                                                                            const Permutation& g) {
  std::array<std::uint8_t, kVeldkampDimension> cols{};
  for (int k = 0; k < kVeldkampDimension; ++k) cols[k] = co.of[cat.index_of(g(cat[co.basis[k]].points))];
  return cols;
}

// All bilinear forms M with P^T M P = M for the coordinate matrix P of every
// given permutation. Solved as a 64-unknown homogeneous system.
inline std::vector<FormMatrix> invariant_form_space(const HyperplaneCatalog& cat, const Coordinates& co,
                                                    std::span<const Permutation> gens) {
  constexpr int d = kVeldkampDimension;
  std::vector<std::uint64_t> equations;
  for (const auto& g : gens) {
    auto cols = coordinate_matrix_columns(cat, co, g);
    auto P = [&](int row, int col) { return (cols[col] >> row) & 1; };
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        // sum_{k,l} P[k][i] M[k][l] P[l][j] + M[i][j] = 0
        std::uint64_t eq = std::uint64_t{1} << (d * i + j);
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l)
            if (P(k, i) && P(l, j)) eq ^= std::uint64_t{1} << (d * k + l);
        equations.push_back(eq);
      }
  }
  auto basis = gf2::nullspace(equations, d * d);
  if (basis.size() > 16) throw VeldkampError("invariant form space too large to enumerate");

  std::vector<FormMatrix> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << basis.size()); ++pick) {
    std::uint64_t x = 0;
    for (std::size_t b = 0; b < basis.size(); ++b)
      if ((pick >> b) & 1) x ^= basis[b];
    FormMatrix m{};
    for (int i = 0; i < d; ++i) m[i] = static_cast<std::uint8_t>(x >> (d * i));
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// (isotropic, non-isotropic). Isotropy by odd core size, cross-checked
// against the form vanishing on every member pair.
inline std::pair<int, int> isotropic_line_counts(const VeldkampSpace& space, const HyperplaneCatalog& cat) {
  int iso = 0, non = 0;
  for (const auto& l : space.lines()) {
    bool odd_core = l.core.size() % 2 == 1;
    bool vanishes = true;
    for (int x : l.members)
      for (int y : l.members)
        if (symplectic_form(cat[x].points, cat[y].points)) vanishes = false;
    if (odd_core != vanishes) throw VeldkampError("core-parity and form criteria for isotropy disagree");
    (odd_core ? iso : non) += 1;
  }
  return {iso, non};
}

inline bool is_isotropic(const VeldkampLine& l) { return l.core.size() % 2 == 1; }

// ---------------------------------------------------------------------------
// H3 nucleus and axis

inline Point nucleus(const Geometry& g, PointSet h3) {
  std::optional<Point> found;
  for (Point p : h3) {
    if (point_order(g, h3, p) != 0) continue;
    if (found) throw VeldkampError("hyperplane has more than one point of order zero");
    found = p;
  }
  if (!found) throw VeldkampError("hyperplane has no point of order zero");
  return *found;
}

// The two points sharing a quad with each of the 12 non-nucleus points.
inline std::pair<Point, Point> axis(const Geometry& g, PointSet h3) {
  if (h3.size() != type_row(HyperplaneType::H3).n_points || !is_hyperplane(g, h3))
    throw VeldkampError("axis is defined for H3 hyperplanes only");
  PointSet rest = h3;
  rest.erase(nucleus(g, h3));
  std::vector<Point> found;
  for (int i = 0; i < kNumPoints; ++i) {
    Point x(i);
    bool all = true;
    for (Point p : rest)
      if (!g.coplanar(x, p)) all = false;
    if (all) found.push_back(x);
  }
  if (found.size() != 2) throw VeldkampError("H3 axis has " + std::to_string(found.size()) + " points, expected 2");
  return {found[0], found[1]};
}

// The H3 with the given axis: the sum of the singular hyperplanes at two
// points at maximal distance.
inline PointSet h3_with_axis(const Geometry& g, Point x, Point y) {
  if (g.distance(x, y) != 3) throw VeldkampError("axis points must be at distance 3");
  return vsum(singular_hyperplane(g, x), singular_hyperplane(g, y));
}

// Indices of all lines whose core equals s.
inline std::vector<int> lines_with_core(const VeldkampSpace& space, PointSet s) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(space.size()); ++i)
    if (space.line(i).core == s) out.push_back(i);
  return out;
}

}  // namespace gray27
