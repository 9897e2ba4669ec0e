#pragma once

// Everything built in order: grid, group, hyperplane catalog, Veldkamp space,
// coordinates and line classification.

#include <span>
#include <vector>

#include "gray27/veldkamp.hpp"

namespace gray27 {

struct Model {
  Geometry geometry;
  std::vector<Permutation> gens;
  Group group;
  HyperplaneCatalog catalog;
  VeldkampSpace space;
  Coordinates coordinates;
  LineClassification classification;
};

inline Model build_model(std::span<const Permutation> gens) {
  Geometry g = build_grid();
  Group G = enumerate_group(g, gens);
  HyperplaneCatalog cat = build_catalog(g, G);
  VeldkampSpace space = build_space(g, cat);
  Coordinates co = coordinatize(cat, space);
  LineClassification cls = classify_lines(space, cat);
  return Model{std::move(g),     {gens.begin(), gens.end()}, std::move(G), std::move(cat), std::move(space),
               std::move(co),    std::move(cls)};
}

inline Model build_model() {
  auto gens = generators();
  return build_model(gens);
}

}  // namespace gray27
