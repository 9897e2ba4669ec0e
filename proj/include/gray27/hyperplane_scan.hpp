#pragma once

// Exhaustive scan of all 2^27 point subsets for the hyperplane predicate.
// Independent of the span construction in hyperplanes.hpp; used to certify it.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <thread>
#include <vector>

#include "gray27/geometry.hpp"

namespace gray27 {

// Masks in [begin, end) meeting every line in one or three points, excluding
// the full set. Ranges are independent, so disjoint ranges can run in parallel.
inline std::vector<std::uint32_t> scan_hyperplane_masks(const Geometry& g, std::uint32_t begin, std::uint32_t end) {
  std::array<std::uint32_t, kNumLines> line_masks{};
  for (int i = 0; i < kNumLines; ++i) line_masks[i] = g.line(i).mask.mask();

  std::vector<std::uint32_t> found;
  for (std::uint32_t m = begin; m < end; ++m) {
    bool ok = true;
    for (std::uint32_t lm : line_masks) {
      int n = std::popcount(m & lm);
      if (n != 1 && n != 3) {
        ok = false;
        break;
      }
    }
    if (ok && m != PointSet::kFullMask) found.push_back(m);
  }
  return found;
}

// Full scan, split over `workers` threads. Result is ascending.
inline std::vector<std::uint32_t> scan_all_hyperplanes(const Geometry& g, unsigned workers = 0) {
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  constexpr std::uint64_t kTotal = std::uint64_t{1} << kNumPoints;
  std::vector<std::vector<std::uint32_t>> parts(workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    auto lo = static_cast<std::uint32_t>(kTotal * w / workers);
    auto hi = static_cast<std::uint32_t>(kTotal * (w + 1) / workers);
    threads.emplace_back([&g, &parts, w, lo, hi] { parts[w] = scan_hyperplane_masks(g, lo, hi); });
  }
  for (auto& t : threads) t.join();

  std::vector<std::uint32_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace gray27
