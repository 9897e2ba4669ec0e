#pragma once

// The 255 hyperplanes with full signatures, plus the group action on them.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gray27/group.hpp"
#include "gray27/hyperplanes.hpp"

namespace gray27 {

// Permutation of catalog indices induced by one group element.
using IndexPermutation = std::array<std::uint8_t, kNumHyperplanes>;

class HyperplaneCatalog {
 public:
  std::size_t size() const { return entries_.size(); }
  const Hyperplane& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Hyperplane>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  std::optional<int> find(PointSet s) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), s.mask(),
                               [](const Hyperplane& h, std::uint32_t m) { return h.id < m; });
    if (it == entries_.end() || it->id != s.mask()) return std::nullopt;
    return static_cast<int>(it - entries_.begin());
  }

  int index_of(PointSet s) const {
    if (auto i = find(s)) return *i;
    throw HyperplaneError("not a catalogued hyperplane: " + s.to_string());
  }

  HyperplaneType type_of(int i) const { return entries_[i].signature.type; }

  std::vector<PointSet> of_type(HyperplaneType t) const {
    std::vector<PointSet> out;
    for (const auto& h : entries_)
      if (h.signature.type == t) out.push_back(h.points);
    return out;
  }

  // One entry per group element, in the group's element order.
  const std::vector<IndexPermutation>& induced_action() const { return action_; }

  friend HyperplaneCatalog build_catalog(const Geometry& g, const Group& G);

 private:
  std::vector<Hyperplane> entries_;
  std::vector<IndexPermutation> action_;
};

// Enumerates, classifies, and attaches stabilizer and orbit data. Checks the
// orbit-stabilizer identity and that each type is a single orbit.
inline HyperplaneCatalog build_catalog(const Geometry& g, const Group& G) {
  HyperplaneCatalog cat;
  for (PointSet h : enumerate_hyperplanes(g)) cat.entries_.push_back({h.mask(), h, classify(g, h)});

  cat.action_.reserve(G.order());
  for (const auto& perm : G) {
    IndexPermutation img{};
    for (std::size_t i = 0; i < cat.size(); ++i) img[i] = static_cast<std::uint8_t>(cat.index_of(perm(cat[i].points)));
    cat.action_.push_back(img);
  }

  std::array<int, 5> per_type{};
  for (const auto& h : cat.entries_) ++per_type[type_index(h.signature.type)];

  for (std::size_t i = 0; i < cat.size(); ++i) {
    std::vector<char> hit(cat.size(), 0);
    int orbit_size = 0, stab = 0;
    for (const auto& img : cat.action_) {
      if (!hit[img[i]]) {
        hit[img[i]] = 1;
        ++orbit_size;
      }
      if (img[i] == i) ++stab;
    }
    auto& sig = cat.entries_[i].signature;
    sig.orbit_size = orbit_size;
    sig.stabilizer_order = stab;
    if (orbit_size * stab != static_cast<int>(G.order()))
      throw GroupError("orbit-stabilizer identity fails for " + cat[i].points.to_string());
    if (orbit_size != per_type[type_index(sig.type)])
      throw GroupError(to_string(sig.type) + " hyperplanes do not form a single orbit");
  }
  return cat;
}

inline int ordered_pair_orbit_count(const Group& G, const HyperplaneCatalog& cat, HyperplaneType a, HyperplaneType b,
                                    bool exclude_equal) {
  auto as = cat.of_type(a);
  auto bs = cat.of_type(b);
  return ordered_pair_orbit_count(G, as, bs, exclude_equal);
}

struct OrbitReport {
  HyperplaneType type = HyperplaneType::H1;
  int orbit_size = 0;
  int stabilizer_order = 0;
  std::map<int, int> element_order_profile;
  std::string structure_label;
  PointSet representative;
};

// One report per type, using the lowest-id hyperplane as representative.
inline std::vector<OrbitReport> orbit_reports(const Group& G, const HyperplaneCatalog& cat) {
  std::vector<OrbitReport> out;
  for (HyperplaneType t : kHyperplaneTypes) {
    PointSet rep = cat.of_type(t).front();
    Group stab = stabilizer(G, rep);
    out.push_back({t, static_cast<int>(orbit(G, rep).size()), static_cast<int>(stab.order()),
                   element_order_profile(stab), type_row(t).structure_label, rep});
  }
  return out;
}

}  // namespace gray27
