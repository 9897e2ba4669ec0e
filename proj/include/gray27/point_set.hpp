#pragma once

// Points of the 3x3x3 grid and 27-bit point sets.
//
// A point is a triple of ternary digits (d1, d2, d3) encoded as
// index = 9*d1 + 3*d2 + d3. Digit positions are numbered 0..2 from the most
// significant digit. Every mask, id and export in the library uses this order.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gray27 {

inline constexpr int kNumPoints = 27;

class Point {
 public:
  constexpr Point() = default;
  constexpr explicit Point(int index) : index_(static_cast<std::uint8_t>(index)) {
    if (index < 0 || index >= kNumPoints) throw std::out_of_range("point index out of range");
  }

  static constexpr Point from_digits(int d1, int d2, int d3) {
    if (d1 < 0 || d1 > 2 || d2 < 0 || d2 > 2 || d3 < 0 || d3 > 2)
      throw std::out_of_range("ternary digit out of range");
    return Point(9 * d1 + 3 * d2 + d3);
  }

  // Parses a label such as "012".
  static Point parse(std::string_view label) {
    if (label.size() != 3) throw std::invalid_argument("point label must have three digits: " + std::string(label));
    std::array<int, 3> d{};
    for (int i = 0; i < 3; ++i) {
      if (label[i] < '0' || label[i] > '2')
        throw std::invalid_argument("point label must use digits 0-2: " + std::string(label));
      d[i] = label[i] - '0';
    }
    return from_digits(d[0], d[1], d[2]);
  }

  constexpr int index() const { return index_; }

  constexpr int digit(int position) const {
    switch (position) {
      case 0: return index_ / 9;
      case 1: return (index_ / 3) % 3;
      case 2: return index_ % 3;
      default: throw std::out_of_range("digit position must be 0, 1 or 2");
    }
  }

  constexpr std::array<int, 3> digits() const { return {digit(0), digit(1), digit(2)}; }

  std::string label() const {
    return {static_cast<char>('0' + digit(0)), static_cast<char>('0' + digit(1)), static_cast<char>('0' + digit(2))};
  }

  friend constexpr auto operator<=>(Point, Point) = default;

 private:
  std::uint8_t index_ = 0;
};

// Set of grid points as a 27-bit mask. All operations are total; complement is
// taken with respect to the full point set.
class PointSet {
 public:
  static constexpr std::uint32_t kFullMask = (std::uint32_t{1} << kNumPoints) - 1;

  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint32_t mask) : mask_(mask) {
    if ((mask & ~kFullMask) != 0) throw std::out_of_range("point set mask wider than 27 bits");
  }
  constexpr PointSet(std::initializer_list<Point> points) {
    for (Point p : points) insert(p);
  }

  static constexpr PointSet full() { return PointSet(kFullMask); }
  static constexpr PointSet empty_set() { return PointSet(); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool is_full() const { return mask_ == kFullMask; }

  constexpr bool contains(Point p) const { return (mask_ >> p.index()) & 1U; }
  constexpr bool contains(PointSet other) const { return (other.mask_ & ~mask_) == 0; }

  constexpr void insert(Point p) { mask_ |= std::uint32_t{1} << p.index(); }
  constexpr void erase(Point p) { mask_ &= ~(std::uint32_t{1} << p.index()); }

  constexpr PointSet complement() const { return PointSet(~mask_ & kFullMask); }

  friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.mask_ & b.mask_); }
  friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.mask_ | b.mask_); }
  friend constexpr PointSet operator^(PointSet a, PointSet b) { return PointSet(a.mask_ ^ b.mask_); }
  friend constexpr PointSet operator-(PointSet a, PointSet b) { return PointSet(a.mask_ & ~b.mask_); }
  friend constexpr auto operator<=>(PointSet, PointSet) = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Point;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Point;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr Point operator*() const { return Point(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint32_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Point> points() const { return {begin(), end()}; }

  // Space separated point labels in ascending index order.
  std::string to_string() const {
    std::string out;
    for (Point p : *this) {
      if (!out.empty()) out += ' ';
      out += p.label();
    }
    return out;
  }

 private:
  std::uint32_t mask_ = 0;
};

}  // namespace gray27
