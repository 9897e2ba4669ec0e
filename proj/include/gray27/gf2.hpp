#pragma once

// Small GF(2) linear algebra on machine words.

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace gray27::gf2 {

// Incremental echelon basis. Every stored row remembers which of the inserted
// vectors it is a combination of, so that any vector in the span can be
// expressed in terms of the inserted vectors.
class XorBasis {
 public:
  // Inserts v; returns false if v is already in the span.
  bool insert(std::uint64_t v) {
    std::uint64_t combo = std::uint64_t{1} << count_;
    reduce(v, combo);
    if (v == 0) return false;
    rows_.push_back({v, combo});
    ++count_;
    return true;
  }

  int dimension() const { return count_; }

  // Bit i of the result set means inserted vector i takes part in the sum.
  std::optional<std::uint64_t> express(std::uint64_t v) const {
    std::uint64_t combo = 0;
    reduce(v, combo);
    if (v != 0) return std::nullopt;
    return combo;
  }

 private:
  struct Row {
    std::uint64_t value;
    std::uint64_t combo;
  };

  void reduce(std::uint64_t& v, std::uint64_t& combo) const {
    for (const Row& r : rows_) {
      std::uint64_t pivot = std::uint64_t{1} << (63 - std::countl_zero(r.value));
      if (v & pivot) {
        v ^= r.value;
        combo ^= r.combo;
      }
    }
  }

  std::vector<Row> rows_;  // distinct leading bits
  int count_ = 0;
};

inline int rank(std::vector<std::uint64_t> rows) {
  XorBasis b;
  for (auto r : rows) b.insert(r);
  return b.dimension();
}

// Basis of {x : row . x = 0 for every row}, x ranging over vectors of width
// `columns` (at most 64).
inline std::vector<std::uint64_t> nullspace(std::vector<std::uint64_t> rows, int columns) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < columns && r < rows.size(); ++c) {
    std::uint64_t bit = std::uint64_t{1} << c;
    std::size_t sel = r;
    while (sel < rows.size() && !(rows[sel] & bit)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
    pivot_col.push_back(c);
    ++r;
  }

  std::uint64_t pivots = 0;
  for (int c : pivot_col) pivots |= std::uint64_t{1} << c;

  std::vector<std::uint64_t> basis;
  for (int f = 0; f < columns; ++f) {
    std::uint64_t fbit = std::uint64_t{1} << f;
    if (pivots & fbit) continue;
    std::uint64_t x = fbit;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      if (rows[i] & fbit) x |= std::uint64_t{1} << pivot_col[i];
    basis.push_back(x);
  }
  return basis;
}

inline int parity(std::uint64_t v) { return std::popcount(v) & 1; }

}  // namespace gray27::gf2
