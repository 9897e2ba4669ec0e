#pragma once

// The automorphism group of the grid as explicit permutations of the 27 points.
//
// The group is generated by value permutations acting on each digit
// independently together with permutations of the digit positions. At 1296
// elements it is stored in full; orbits and stabilizers are plain scans.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gray27/geometry.hpp"

namespace gray27 {

inline constexpr int kGroupOrder = 1296;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Permutation {
 public:
  Permutation() { std::iota(images_.begin(), images_.end(), std::uint8_t{0}); }

  explicit Permutation(const std::array<std::uint8_t, kNumPoints>& images) : images_(images) {
    std::array<bool, kNumPoints> hit{};
    for (std::uint8_t v : images_) {
      if (v >= kNumPoints || hit[v]) throw GroupError("permutation images are not a bijection on 27 points");
      hit[v] = true;
    }
  }

  // Permutation induced by a map on digit triples.
  template <typename DigitMap>
  static Permutation from_digit_map(DigitMap&& f) {
    std::array<std::uint8_t, kNumPoints> images{};
    for (int i = 0; i < kNumPoints; ++i) {
      std::array<int, 3> d = f(Point(i).digits());
      images[i] = static_cast<std::uint8_t>(Point::from_digits(d[0], d[1], d[2]).index());
    }
    return Permutation(images);
  }

  static Permutation identity() { return {}; }

  Point operator()(Point p) const { return Point(images_[p.index()]); }

  PointSet operator()(PointSet s) const {
    std::uint32_t out = 0;
    for (Point p : s) out |= std::uint32_t{1} << images_[p.index()];
    return PointSet(out);
  }

  // (a * b)(x) = a(b(x))
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    Permutation r;
    for (int i = 0; i < kNumPoints; ++i) r.images_[i] = a.images_[b.images_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    for (int i = 0; i < kNumPoints; ++i) r.images_[images_[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  bool is_identity() const { return *this == Permutation(); }

  int order() const {
    int n = 1;
    for (Permutation p = *this; !p.is_identity(); p = p * *this) ++n;
    return n;
  }

  const std::array<std::uint8_t, kNumPoints>& images() const { return images_; }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::array<std::uint8_t, kNumPoints> images_{};
};

inline PointSet act_on_set(const Permutation& p, PointSet s) { return p(s); }

inline bool is_automorphism(const Geometry& g, const Permutation& p) {
  std::set<std::uint32_t> line_masks;
  for (const Line& l : g.lines()) line_masks.insert(l.mask.mask());
  return std::all_of(g.lines().begin(), g.lines().end(),
                     [&](const Line& l) { return line_masks.contains(p(l.mask).mask()); });
}

// Eight generators: per digit position the value swap (0 1) and the value
// cycle (0 1 2), then the position swap of the first two digits and the
// position cycle (d1, d2, d3) -> (d3, d1, d2).
inline std::vector<Permutation> generators() {
  std::vector<Permutation> gens;
  for (int pos = 0; pos < 3; ++pos) {
    gens.push_back(Permutation::from_digit_map([pos](std::array<int, 3> d) {
      if (d[pos] < 2) d[pos] = 1 - d[pos];
      return d;
    }));
    gens.push_back(Permutation::from_digit_map([pos](std::array<int, 3> d) {
      d[pos] = (d[pos] + 1) % 3;
      return d;
    }));
  }
  gens.push_back(Permutation::from_digit_map([](std::array<int, 3> d) { return std::array<int, 3>{d[1], d[0], d[2]}; }));
  gens.push_back(Permutation::from_digit_map([](std::array<int, 3> d) { return std::array<int, 3>{d[2], d[0], d[1]}; }));
  return gens;
}

// A set of permutations closed under composition, stored sorted.
class Group {
 public:
  Group() : elements_{Permutation::identity()} {}
  explicit Group(std::vector<Permutation> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  }

  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool contains(const Permutation& p) const { return std::binary_search(elements_.begin(), elements_.end(), p); }

  bool is_closed() const {
    if (!contains(Permutation::identity())) return false;
    for (const auto& a : elements_) {
      if (!contains(a.inverse())) return false;
      for (const auto& b : elements_)
        if (!contains(a * b)) return false;
    }
    return true;
  }

 private:
  std::vector<Permutation> elements_;
};

inline Group closure(std::span<const Permutation> gens) {
  std::set<Permutation> seen{Permutation::identity()};
  std::vector<Permutation> frontier{Permutation::identity()};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier)
      for (const auto& s : gens) {
        Permutation p = s * e;
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return Group(std::vector<Permutation>(seen.begin(), seen.end()));
}

// Closure of gens, checked to be the full automorphism group of order 1296.
inline Group enumerate_group(const Geometry& g, std::span<const Permutation> gens) {
  for (const auto& s : gens)
    if (!is_automorphism(g, s)) throw GroupError("generator does not map lines to lines");
  Group G = closure(gens);
  if (G.order() != kGroupOrder)
    throw GroupError("generator closure has " + std::to_string(G.order()) + " elements, expected 1296");
  return G;
}

inline std::vector<PointSet> orbit(const Group& G, PointSet s) {
  std::set<PointSet> out;
  for (const auto& g : G) out.insert(g(s));
  return {out.begin(), out.end()};
}

inline Group stabilizer(const Group& G, PointSet s) {
  std::vector<Permutation> fix;
  for (const auto& g : G)
    if (g(s) == s) fix.push_back(g);
  return Group(std::move(fix));
}

// Element order -> number of elements of that order.
inline std::map<int, int> element_order_profile(const Group& S) {
  std::map<int, int> profile;
  for (const auto& g : S) ++profile[g.order()];
  return profile;
}

// Number of G-orbits on ordered pairs (A, B) with A in as and B in bs. Both
// lists must be G-invariant. With exclude_equal the diagonal pairs (A, A) are
// left out. Equals the number of double cosets K_a \ G / K_b of the
// stabilizers of representatives, minus the diagonal coset when excluded.
inline int ordered_pair_orbit_count(const Group& G, std::span<const PointSet> as, std::span<const PointSet> bs,
                                    bool exclude_equal) {
  std::unordered_map<std::uint32_t, int> index_a, index_b;
  for (std::size_t i = 0; i < as.size(); ++i) index_a[as[i].mask()] = static_cast<int>(i);
  for (std::size_t i = 0; i < bs.size(); ++i) index_b[bs[i].mask()] = static_cast<int>(i);

  // Induced action of every element on both index lists.
  std::vector<std::vector<int>> act_a, act_b;
  act_a.reserve(G.order());
  act_b.reserve(G.order());
  auto induced = [](const Permutation& g, std::span<const PointSet> sets,
                    const std::unordered_map<std::uint32_t, int>& index) {
    std::vector<int> img(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
      auto it = index.find(g(sets[i]).mask());
      if (it == index.end()) throw GroupError("pair orbit count: set list is not invariant under the group");
      img[i] = it->second;
    }
    return img;
  };
  for (const auto& g : G) {
    act_a.push_back(induced(g, as, index_a));
    act_b.push_back(induced(g, bs, index_b));
  }

  const std::size_t nb = bs.size();
  std::vector<char> visited(as.size() * nb, 0);
  int orbits = 0;
  for (std::size_t a = 0; a < as.size(); ++a) {
    for (std::size_t b = 0; b < nb; ++b) {
      if (visited[a * nb + b]) continue;
      if (exclude_equal && as[a] == bs[b]) continue;
      ++orbits;
      for (std::size_t k = 0; k < act_a.size(); ++k) visited[act_a[k][a] * nb + act_b[k][b]] = 1;
    }
  }
  return orbits;
}

}  // namespace gray27
