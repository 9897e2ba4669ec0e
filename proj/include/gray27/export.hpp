#pragma once

// Deterministic artifacts: JSON catalogs, the line CSV and the collinearity
// graph in DOT. Orderings are fixed by catalog and line indices, so equal
// models give byte-identical output.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gray27/model.hpp"
#include "gray27/tables.hpp"

namespace gray27 {

class ExportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string hyperplanes_json(const HyperplaneCatalog& cat) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& h : cat) {
    const auto& s = h.signature;
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (Point p : h.points) labels.push_back(p.label());
    nlohmann::ordered_json j;
    j["id"] = h.id;
    j["type"] = to_string(s.type);
    j["points"] = labels;
    j["n_points"] = s.n_points;
    j["n_lines"] = s.n_lines;
    j["order_profile"] = s.order_profile;
    j["quad_profile"] = {{"deep", s.quad_profile.deep}, {"singular", s.quad_profile.singular},
                         {"ovoidal", s.quad_profile.ovoidal}};
    j["weight"] = s.weight;
    j["stabilizer_order"] = s.stabilizer_order;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

inline std::string orbit_reports_json(const Group& G, const HyperplaneCatalog& cat) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : orbit_reports(G, cat)) {
    nlohmann::ordered_json profile = nlohmann::ordered_json::object();
    for (auto [order, count] : r.element_order_profile) profile[std::to_string(order)] = count;
    nlohmann::ordered_json j;
    j["hyperplane_type"] = to_string(r.type);
    j["orbit_size"] = r.orbit_size;
    j["stabilizer_order"] = r.stabilizer_order;
    j["element_order_profile"] = profile;
    j["structure_label"] = r.structure_label;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

inline std::string line_types_json(const LineClassification& cls) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int t = 1; t <= kNumLineTypes; ++t) arr.push_back(line_type_json(line_type_summary(cls, t)));
  return arr.dump(2) + "\n";
}

// Member ids are hyperplane ids (point-set masks); core_mask is the mask of
// the core; isotropic is 0 or 1.
inline std::string lines_csv(const HyperplaneCatalog& cat, const VeldkampSpace& space) {
  std::ostringstream out;
  out << "line_id,member_a,member_b,member_c,type_id,core_mask,isotropic\n";
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto& l = space.line(static_cast<int>(i));
    out << i;
    for (int m : l.members) out << ',' << cat[m].id;
    out << ',' << l.type_id << ',' << l.core.mask() << ',' << (is_isotropic(l) ? 1 : 0) << '\n';
  }
  return out.str();
}

inline std::string collinearity_dot(const Geometry& g) {
  std::ostringstream out;
  out << "graph collinearity {\n";
  for (int i = 0; i < kNumPoints; ++i) out << "  \"" << Point(i).label() << "\";\n";
  for (int i = 0; i < kNumPoints; ++i)
    for (int j = i + 1; j < kNumPoints; ++j)
      if (g.collinear(Point(i), Point(j)))
        out << "  \"" << Point(i).label() << "\" -- \"" << Point(j).label() << "\";\n";
  out << "}\n";
  return out.str();
}

enum class ExportKind { Hyperplanes, Lines, Graph, Orbits, LineTypes };

inline std::string export_artifact(const Model& m, ExportKind kind) {
  switch (kind) {
    case ExportKind::Hyperplanes: return hyperplanes_json(m.catalog);
    case ExportKind::Lines: return lines_csv(m.catalog, m.space);
    case ExportKind::Graph: return collinearity_dot(m.geometry);
    case ExportKind::Orbits: return orbit_reports_json(m.group, m.catalog);
    case ExportKind::LineTypes: return line_types_json(m.classification);
  }
  throw std::invalid_argument("unknown export kind");
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ExportError("cannot open " + path + " for writing");
  f << content;
  f.close();
  if (!f) throw ExportError("failed writing " + path);
}

}  // namespace gray27
