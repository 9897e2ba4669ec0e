// Lists one hyperplane of each type with its signature and draws it.

#include <iostream>

#include "gray27/gray27.hpp"

int main() {
  const gray27::Model m = gray27::build_model();
  for (gray27::HyperplaneType t : gray27::kHyperplaneTypes) {
    gray27::PointSet h = m.catalog.of_type(t).front();
    const auto& s = m.catalog[m.catalog.index_of(h)].signature;
    std::cout << gray27::to_string(t) << ": " << s.n_points << " points, " << s.n_lines << " lines, weight "
              << s.weight << ", stabilizer " << s.stabilizer_order << ", orbit " << s.orbit_size << "\n"
              << gray27::render_ascii(m.geometry, h) << "\n";
  }
}
