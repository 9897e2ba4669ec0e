#pragma once

// Geometric hyperplanes of the grid as a GF(2) vector space.
//
// The Veldkamp sum of two hyperplanes is the complement of their symmetric
// difference. The full point set is the zero vector: it is representable and
// flows through vsum, but it is never a hyperplane.

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gray27/geometry.hpp"

namespace gray27 {

inline constexpr int kNumHyperplanes = 255;

class HyperplaneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class HyperplaneType { H1 = 1, H2, H3, H4, H5 };

inline constexpr std::array<HyperplaneType, 5> kHyperplaneTypes = {HyperplaneType::H1, HyperplaneType::H2,
                                                                   HyperplaneType::H3, HyperplaneType::H4,
                                                                   HyperplaneType::H5};

inline constexpr int type_index(HyperplaneType t) { return static_cast<int>(t) - 1; }

inline std::string to_string(HyperplaneType t) { return "H" + std::to_string(static_cast<int>(t)); }

enum class QuadRelation { Deep, Singular, Ovoidal };

struct QuadProfile {
  int deep = 0;
  int singular = 0;
  int ovoidal = 0;
  friend constexpr bool operator==(const QuadProfile&, const QuadProfile&) = default;
};

struct ClassSignature {
  HyperplaneType type = HyperplaneType::H1;
  int n_points = 0;
  int n_lines = 0;
  std::array<int, 4> order_profile{};  // number of points of order 0..3
  QuadProfile quad_profile;
  int weight = 0;
  // Filled in once the automorphism group is known (see catalog.hpp).
  int stabilizer_order = 0;
  int orbit_size = 0;
};

struct Hyperplane {
  std::uint32_t id = 0;  // mask of the point set
  PointSet points;
  ClassSignature signature;
};

// Geometric columns of the five hyperplane types, used as a consistency
// tripwire by classify(). Type is keyed on the point count.
struct HyperplaneTypeRow {
  HyperplaneType type;
  int n_points;
  int n_lines;
  std::array<int, 4> order_profile;
  QuadProfile quad_profile;
  const char* structure_label;
};

inline constexpr std::array<HyperplaneTypeRow, 5> kHyperplaneTypeRows = {{
    {HyperplaneType::H1, 19, 15, {0, 0, 12, 7}, {3, 6, 0}, "Z2 wr S3"},
    {HyperplaneType::H2, 15, 9, {0, 6, 6, 3}, {1, 6, 2}, "Z2 x Z2 x S3"},
    {HyperplaneType::H3, 13, 6, {1, 6, 6, 0}, {0, 6, 3}, "D12"},
    {HyperplaneType::H4, 11, 3, {4, 6, 0, 1}, {0, 3, 6}, "S4"},
    {HyperplaneType::H5, 9, 0, {9, 0, 0, 0}, {0, 0, 9}, "E : S3"},
}};

inline const HyperplaneTypeRow& type_row(HyperplaneType t) { return kHyperplaneTypeRows[type_index(t)]; }

inline PointSet vsum(PointSet a, PointSet b) { return (a ^ b).complement(); }

inline PointSet singular_hyperplane(const Geometry& g, Point deepest) { return g.ball(deepest, 2); }

inline std::array<PointSet, kNumPoints> singular_hyperplanes(const Geometry& g) {
  std::array<PointSet, kNumPoints> out;
  for (int i = 0; i < kNumPoints; ++i) out[i] = singular_hyperplane(g, Point(i));
  return out;
}

// The nonzero elements of the GF(2) span of the 27 singular hyperplanes,
// ascending by mask. Every element is checked against is_hyperplane.
inline std::vector<PointSet> enumerate_hyperplanes(const Geometry& g) {
  std::set<std::uint32_t> span{PointSet::full().mask()};
  for (PointSet s : singular_hyperplanes(g)) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t v : span) next.push_back(vsum(PointSet(v), s).mask());
    span.insert(next.begin(), next.end());
  }
  span.erase(PointSet::full().mask());

  std::vector<PointSet> out;
  out.reserve(span.size());
  for (std::uint32_t v : span) {
    PointSet h(v);
    if (!is_hyperplane(g, h)) throw HyperplaneError("span element is not a hyperplane: " + h.to_string());
    out.push_back(h);
  }
  if (out.size() != kNumHyperplanes)
    throw HyperplaneError("expected 255 hyperplanes, span has " + std::to_string(out.size()));
  return out;
}

// Number of lines through p fully inside h.
inline int point_order(const Geometry& g, PointSet h, Point p) {
  if (!h.contains(p)) throw HyperplaneError("point " + p.label() + " is not in the hyperplane");
  int n = 0;
  for (int li : g.lines_through(p)) n += h.contains(g.line(li).mask) ? 1 : 0;
  return n;
}

inline QuadRelation quad_type(const Geometry& g, PointSet h, const Quad& q) {
  PointSet meet = q.points & h;
  switch (meet.size()) {
    case 9:
      return QuadRelation::Deep;
    case 5:
      for (Point x : q.points)
        if (meet == (g.perp(x) & q.points)) return QuadRelation::Singular;
      break;
    case 3: {
      bool independent = true;
      for (Point a : meet)
        for (Point b : meet)
          if (g.collinear(a, b)) independent = false;
      if (independent) return QuadRelation::Ovoidal;
      break;
    }
    default:
      break;
  }
  throw HyperplaneError("quad meets hyperplane in an unrecognised pattern: " + meet.to_string());
}

// Minimal number of distinct singular hyperplanes summing to h.
inline int weight(const Geometry& g, PointSet h) {
  auto singular = singular_hyperplanes(g);
  // Sums of k hyperplanes correspond to XOR of complements.
  std::uint32_t target = h.complement().mask();
  std::array<std::uint32_t, kNumPoints> c{};
  for (int i = 0; i < kNumPoints; ++i) c[i] = singular[i].complement().mask();
  for (int i = 0; i < kNumPoints; ++i)
    if (c[i] == target) return 1;
  for (int i = 0; i < kNumPoints; ++i)
    for (int j = i + 1; j < kNumPoints; ++j)
      if ((c[i] ^ c[j]) == target) return 2;
  for (int i = 0; i < kNumPoints; ++i)
    for (int j = i + 1; j < kNumPoints; ++j)
      for (int k = j + 1; k < kNumPoints; ++k)
        if ((c[i] ^ c[j] ^ c[k]) == target) return 3;
  throw HyperplaneError("no sum of at most three singular hyperplanes gives " + h.to_string());
}

// Geometric signature of h. stabilizer_order and orbit_size stay zero here.
inline ClassSignature classify(const Geometry& g, PointSet h) {
  if (!is_hyperplane(g, h)) throw HyperplaneError("not a hyperplane: " + h.to_string());
  ClassSignature sig;
  sig.n_points = h.size();
  sig.n_lines = g.lines_inside(h);
  for (Point p : h) ++sig.order_profile[point_order(g, h, p)];
  for (const Quad& q : g.quads()) {
    switch (quad_type(g, h, q)) {
      case QuadRelation::Deep: ++sig.quad_profile.deep; break;
      case QuadRelation::Singular: ++sig.quad_profile.singular; break;
      case QuadRelation::Ovoidal: ++sig.quad_profile.ovoidal; break;
    }
  }

  auto row = std::find_if(kHyperplaneTypeRows.begin(), kHyperplaneTypeRows.end(),
                          [&](const HyperplaneTypeRow& r) { return r.n_points == sig.n_points; });
  if (row == kHyperplaneTypeRows.end())
    throw HyperplaneError("no hyperplane type has " + std::to_string(sig.n_points) + " points");
  if (row->n_lines != sig.n_lines || row->order_profile != sig.order_profile || !(row->quad_profile == sig.quad_profile))
    throw HyperplaneError("hyperplane signature inconsistent with type " + to_string(row->type) + ": " + h.to_string());
  sig.type = row->type;
  sig.weight = weight(g, h);
  return sig;
}

}  // namespace gray27
