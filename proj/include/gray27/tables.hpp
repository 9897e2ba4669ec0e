#pragma once

// Computed reproductions of the hyperplane, line-type, composition and
// double-coset tables, rendered as text, CSV or JSON.

#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gray27/model.hpp"

namespace gray27 {

enum class TableFormat { Text, Csv, Json };

using TypeMatrix = std::array<std::array<int, 5>, 5>;

struct HyperplaneTypeSummary {
  HyperplaneType type = HyperplaneType::H1;
  ClassSignature signature;  // shared by every member of the type
  int cardinality = 0;
  std::string structure_label;
};

// One row per type. Throws if members of a type disagree on any column.
inline std::vector<HyperplaneTypeSummary> hyperplane_type_summary(const HyperplaneCatalog& cat) {
  std::vector<HyperplaneTypeSummary> rows;
  for (HyperplaneType t : kHyperplaneTypes) {
    HyperplaneTypeSummary row{t, {}, 0, type_row(t).structure_label};
    for (const auto& h : cat) {
      if (h.signature.type != t) continue;
      const auto& s = h.signature;
      if (row.cardinality == 0) {
        row.signature = s;
      } else {
        const auto& r = row.signature;
        if (s.n_points != r.n_points || s.n_lines != r.n_lines || s.order_profile != r.order_profile ||
            !(s.quad_profile == r.quad_profile) || s.weight != r.weight || s.stabilizer_order != r.stabilizer_order)
          throw HyperplaneError("hyperplanes of type " + to_string(t) + " have differing signatures");
      }
      ++row.cardinality;
    }
    rows.push_back(row);
  }
  return rows;
}

// Double-coset table: G-orbits on ordered (Ha, Hb) pairs, diagonal pairs
// (A, A) excluded. Symmetric.
inline TypeMatrix double_coset_table(const Group& G, const HyperplaneCatalog& cat) {
  TypeMatrix m{};
  for (int a = 0; a < 5; ++a)
    for (int b = a; b < 5; ++b)
      m[a][b] = m[b][a] = ordered_pair_orbit_count(G, cat, kHyperplaneTypes[a], kHyperplaneTypes[b], a == b);
  return m;
}

// Row for one line type with the refinement notation recomputed from the
// orbit's profile.
struct LineTypeSummary {
  int type_id = 0;
  std::string core_points;  // e.g. "7_(2)"
  std::string core_lines;   // e.g. "2c"
  CoreProfile profile;
  int cardinality = 0;
};

inline LineTypeSummary line_type_summary(const LineClassification& cls, int type_id) {
  const LineTypeRow& row = line_type_row(type_id);
  const CoreProfile& p = cls.profile_of_type[type_id];
  LineTypeSummary s{type_id, std::to_string(p.n_points), std::to_string(p.n_core_lines), p, cls.cardinality(type_id)};
  if (auto v = subscript_of(row.subscript, p)) {
    switch (row.subscript) {
      case Subscript::OvoidQuads: s.core_points += "_[" + std::to_string(*v) + "]"; break;
      case Subscript::Split: s.core_points += *v == 31 ? "_(3:1)" : "_(2:2)"; break;
      default: s.core_points += "_(" + std::to_string(*v) + ")"; break;
    }
  }
  if (row.mark != Mark::None) {
    if (p.arrangement == LineArrangement::Concurrent) s.core_lines += "c";
    else if (p.arrangement == LineArrangement::Parallel) s.core_lines += "p";
  }
  return s;
}

inline nlohmann::ordered_json line_type_json(const LineTypeSummary& s) {
  nlohmann::ordered_json refinements = nlohmann::ordered_json::object();
  const CoreProfile& p = s.profile;
  if (p.isolated_pair_distance) refinements["isolated_pair_distance"] = *p.isolated_pair_distance;
  refinements["ovoid_quad_count"] = p.ovoid_quad_count;
  if (p.coplanarity_count) refinements["coplanarity_count"] = *p.coplanarity_count;
  if (p.four_point_split) refinements["four_point_split"] = to_string(*p.four_point_split);

  nlohmann::ordered_json composition = nlohmann::ordered_json::object();
  for (int i = 0; i < 5; ++i) composition[to_string(kHyperplaneTypes[i])] = p.composition[i];

  nlohmann::ordered_json j;
  j["type_id"] = s.type_id;
  j["core_points"] = p.n_points;
  j["core_lines"] = p.n_core_lines;
  j["arrangement"] = to_string(p.arrangement);
  j["notation"] = {{"points", s.core_points}, {"lines", s.core_lines}};
  j["refinements"] = refinements;
  j["composition"] = composition;
  j["cardinality"] = s.cardinality;
  return j;
}

namespace detail {

inline std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

inline std::string dash_if_zero(int v) { return v == 0 ? "-" : std::to_string(v); }

inline std::string render_matrix(const TypeMatrix& m, TableFormat fmt) {
  std::ostringstream out;
  switch (fmt) {
    case TableFormat::Text:
      out << "    " << pad("H1", 5) << pad("H2", 5) << pad("H3", 5) << pad("H4", 5) << pad("H5", 5) << '\n';
      for (int a = 0; a < 5; ++a) {
        out << "H" << a + 1 << "  ";
        for (int b = 0; b < 5; ++b) out << pad(b < a ? "" : std::to_string(m[a][b]), 5);
        out << '\n';
      }
      break;
    case TableFormat::Csv:
      out << ",H1,H2,H3,H4,H5\n";
      for (int a = 0; a < 5; ++a) {
        out << "H" << a + 1;
        for (int b = 0; b < 5; ++b) out << ',' << (b < a ? "" : std::to_string(m[a][b]));
        out << '\n';
      }
      break;
    case TableFormat::Json: {
      nlohmann::ordered_json j;
      j["types"] = {"H1", "H2", "H3", "H4", "H5"};
      j["matrix"] = m;
      out << j.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace detail

inline std::string render_table1(const HyperplaneCatalog& cat, TableFormat fmt) {
  auto rows = hyperplane_type_summary(cat);
  std::ostringstream out;
  if (fmt == TableFormat::Json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      const auto& s = r.signature;
      nlohmann::ordered_json j;
      j["type"] = to_string(r.type);
      j["points"] = s.n_points;
      j["lines"] = s.n_lines;
      j["order_profile"] = s.order_profile;
      j["quad_profile"] = {{"deep", s.quad_profile.deep}, {"singular", s.quad_profile.singular},
                           {"ovoidal", s.quad_profile.ovoidal}};
      j["stabilizer_order"] = s.stabilizer_order;
      j["structure_label"] = r.structure_label;
      j["weight"] = s.weight;
      j["cardinality"] = r.cardinality;
      arr.push_back(j);
    }
    out << arr.dump(2) << '\n';
    return out.str();
  }
  if (fmt == TableFormat::Csv) {
    out << "type,points,lines,order0,order1,order2,order3,deep,singular,ovoidal,stabilizer_order,weight,cardinality\n";
    for (const auto& r : rows) {
      const auto& s = r.signature;
      out << to_string(r.type) << ',' << s.n_points << ',' << s.n_lines;
      for (int o : s.order_profile) out << ',' << o;
      out << ',' << s.quad_profile.deep << ',' << s.quad_profile.singular << ',' << s.quad_profile.ovoidal << ','
          << s.stabilizer_order << ',' << s.weight << ',' << r.cardinality << '\n';
    }
    return out.str();
  }
  using detail::pad;
  out << "Hp  Pts Lns |  0  1  2  3 | deep sng ovd | StGr                 Wgt  Crd\n";
  for (const auto& r : rows) {
    const auto& s = r.signature;
    out << to_string(r.type) << pad(std::to_string(s.n_points), 5) << pad(std::to_string(s.n_lines), 4) << " |";
    for (int o : s.order_profile) out << pad(std::to_string(o), 3);
    out << " |" << pad(std::to_string(s.quad_profile.deep), 5) << pad(std::to_string(s.quad_profile.singular), 4)
        << pad(std::to_string(s.quad_profile.ovoidal), 4) << " | ";
    std::string stab = r.structure_label + " (" + std::to_string(s.stabilizer_order) + ")";
    out << stab << std::string(stab.size() < 20 ? 20 - stab.size() : 1, ' ') << pad(std::to_string(s.weight), 4)
        << pad(std::to_string(r.cardinality), 5) << '\n';
  }
  return out.str();
}

inline std::string render_table2(const LineClassification& cls, TableFormat fmt) {
  std::ostringstream out;
  if (fmt == TableFormat::Json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int t = 1; t <= kNumLineTypes; ++t) arr.push_back(line_type_json(line_type_summary(cls, t)));
    out << arr.dump(2) << '\n';
    return out.str();
  }
  if (fmt == TableFormat::Csv) {
    out << "type,core_points,core_lines,H1,H2,H3,H4,H5,cardinality\n";
    for (int t = 1; t <= kNumLineTypes; ++t) {
      auto s = line_type_summary(cls, t);
      out << t << ',' << s.core_points << ',' << s.core_lines;
      for (int c : s.profile.composition) out << ',' << c;
      out << ',' << s.cardinality << '\n';
    }
    return out.str();
  }
  using detail::pad;
  out << "Type  Pts      Lns  |  H1  H2  H3  H4  H5 |  Crd\n";
  int total = 0;
  for (int t = 1; t <= kNumLineTypes; ++t) {
    auto s = line_type_summary(cls, t);
    total += s.cardinality;
    out << pad(std::to_string(t), 4) << "  " << s.core_points << std::string(9 - std::min<std::size_t>(8, s.core_points.size()), ' ')
        << s.core_lines << std::string(5 - std::min<std::size_t>(4, s.core_lines.size()), ' ') << "|";
    for (int c : s.profile.composition) out << pad(detail::dash_if_zero(c), 4);
    out << " |" << pad(std::to_string(s.cardinality), 5) << '\n';
  }
  out << "total" << pad(std::to_string(total), 41) << '\n';
  return out.str();
}

inline std::string render_table(const Model& m, int which, TableFormat fmt) {
  switch (which) {
    case 1: return render_table1(m.catalog, fmt);
    case 2: return render_table2(m.classification, fmt);
    case 3: return detail::render_matrix(composition_summary(m.classification), fmt);
    case 4: return detail::render_matrix(double_coset_table(m.group, m.catalog), fmt);
    default: throw std::invalid_argument("unknown table " + std::to_string(which) + "; expected 1, 2, 3 or 4");
  }
}

}  // namespace gray27
