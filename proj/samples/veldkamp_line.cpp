// The Veldkamp line through two singular hyperplanes: its third member, core
// and line type. Deep points default to 000 and 111.

#include <iostream>

#include "gray27/gray27.hpp"

int main(int argc, char** argv) {
  using namespace gray27;
  const Point x = Point::parse(argc > 1 ? argv[1] : "000");
  const Point y = Point::parse(argc > 2 ? argv[2] : "111");
  if (x == y) {
    std::cerr << "need two distinct points\n";
    return 2;
  }
  const Model m = build_model();
  const int a = m.catalog.index_of(singular_hyperplane(m.geometry, x));
  const int b = m.catalog.index_of(singular_hyperplane(m.geometry, y));
  const VeldkampLine& line = m.space.line(m.space.line_through(a, b));

  for (int i : line.members)
    std::cout << to_string(m.catalog.type_of(i)) << " " << m.catalog[i].points.to_string() << "\n";
  const LineTypeRow& row = line_type_row(line.type_id);
  std::cout << "core {" << line.core.to_string() << "}\n"
            << "type " << line.type_id << " (" << core_points_notation(row) << " points, "
            << core_lines_notation(row) << " lines), " << describe(line.profile) << "\n"
            << (is_isotropic(line) ? "totally isotropic\n" : "not isotropic\n");
}
