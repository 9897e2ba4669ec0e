#pragma once

// End-to-end verification: runs the pipeline stage by stage and checks every
// published claim, one named check per claim, with its runtime budget.

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gray27/export.hpp"
#include "gray27/hyperplane_scan.hpp"
#include "gray27/model.hpp"
#include "gray27/tables.hpp"

namespace gray27 {

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIP";
  }
  return "?";
}

struct Check {
  int id = 0;
  std::string name;
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::Fail;
  double seconds = 0;
  double budget_seconds = 0;  // 0 means no budget
};

struct RunReport {
  std::vector<Check> checks;
  std::vector<std::pair<std::string, double>> phases;  // name, seconds
  std::optional<std::string> build_error;               // set when the pipeline could not be built

  bool passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
  }
};

// Check names, in criterion order. The acceptance suite uses the same names.
inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "hyperplane-census",    "oracle-equivalence", "hyperplane-types",         "automorphism-group",
      "veldkamp-space",       "line-classification", "composition-and-double-cosets", "type-24-witness",
      "symplectic-form",      "core-reconstruction", "determinism",
  };
  return names;
}

struct VerifyOptions {
  bool oracle = false;
  std::vector<Permutation> gens = generators();
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <typename Range>
std::string join(const Range& r, const char* sep = ",") {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : r) {
    if (!first) out << sep;
    out << x;
    first = false;
  }
  return out.str();
}

inline std::vector<int> upper_triangle(const TypeMatrix& m) {
  std::vector<int> out;
  for (int a = 0; a < 5; ++a)
    for (int b = a; b < 5; ++b) out.push_back(m[a][b]);
  return out;
}

inline std::string cell_name(int a, int b) { return "(H" + std::to_string(a + 1) + ",H" + std::to_string(b + 1) + ")"; }

}  // namespace detail

// Published values.
inline constexpr std::array<int, 5> kExpectedTypeCounts = {27, 54, 108, 54, 12};
inline constexpr std::array<int, kNumLineTypes> kExpectedLineCardinalities = {
    27,  162, 108, 81,  648, 18,  324, 324, 324, 18,  108, 648, 648, 27,  162, 324, 324, 162, 324, 108, 108,
    648, 108, 648, 216, 108, 648, 36,  162, 648, 324, 324, 648, 324, 216, 324, 54,  54,  216, 108, 4};
inline constexpr std::array<int, 15> kExpectedCompositionTable = {3, 4, 6, 5, 2, 7, 9, 6, 3, 12, 8, 4, 8, 3, 2};
inline constexpr std::array<int, 15> kExpectedDoubleCosetTable = {3, 4, 6, 5, 2, 7, 9, 6, 3, 15, 9, 4, 9, 3, 2};

// Throws when the pipeline cannot be built (for example a generator set that
// does not yield the automorphism group); check failures are reported.
inline RunReport run_verification(const VerifyOptions& opts = {}) {
  using detail::join;
  using detail::Stopwatch;
  RunReport report;
  auto add = [&](int id, std::string expected, std::string actual, bool ok, double secs, double budget) {
    Check c{id, check_names()[id - 1], std::move(expected), std::move(actual), ok ? CheckStatus::Pass : CheckStatus::Fail,
            secs, budget};
    if (budget > 0 && secs >= budget) {
      c.status = CheckStatus::Fail;
      c.actual += " [over budget]";
    }
    report.checks.push_back(std::move(c));
  };
  auto phase = [&](const char* name, const auto& fn) {
    Stopwatch w;
    auto r = fn();
    report.phases.emplace_back(name, w.seconds());
    return r;
  };

  Geometry g = phase("grid", [] { return build_grid(); });

  // 1
  Stopwatch w1;
  auto hyperplanes = phase("hyperplanes", [&] { return enumerate_hyperplanes(g); });
  std::array<int, 5> counts{};
  for (PointSet h : hyperplanes) ++counts[type_index(classify(g, h).type)];
  double t1 = w1.seconds();
  add(1, "255 = " + join(kExpectedTypeCounts), std::to_string(hyperplanes.size()) + " = " + join(counts),
      hyperplanes.size() == kNumHyperplanes && counts == kExpectedTypeCounts, t1, 1.0);

  // 2
  if (opts.oracle) {
    Stopwatch w;
    auto scanned = phase("oracle", [&] { return scan_all_hyperplanes(g); });
    std::vector<std::uint32_t> ours;
    for (PointSet h : hyperplanes) ours.push_back(h.mask());
    std::sort(ours.begin(), ours.end());
    add(2, "scan == enumeration (255 sets)",
        std::to_string(scanned.size()) + " sets, " + (scanned == ours ? "equal" : "different"), scanned == ours,
        w.seconds(), 180.0);
  } else {
    report.checks.push_back({2, check_names()[1], "scan == enumeration", "not run (needs --oracle)",
                             CheckStatus::Skipped, 0, 180.0});
  }

  // 4 runs before 3 because stabilizer orders need the group.
  Stopwatch w4;
  // A generator that is not an automorphism could generate all of Sym(27).
  bool gens_ok = std::all_of(opts.gens.begin(), opts.gens.end(), [&](const Permutation& p) { return is_automorphism(g, p); });
  Group G = phase("group", [&] { return closure(gens_ok ? std::span(opts.gens) : std::span<const Permutation>{}); });
  bool automorphisms = gens_ok && std::all_of(G.begin(), G.end(), [&](const Permutation& p) { return is_automorphism(g, p); });
  bool transitive = orbit(G, PointSet{Point(0)}).size() == kNumPoints;
  double t4 = w4.seconds();

  // 3
  Stopwatch w3;
  std::ostringstream exp3, act3;
  bool ok3 = true;
  {
    struct Row {
      int pts, lns;
      std::array<int, 4> orders;
      QuadProfile quads;
      int weight, stab, crd;
    };
    const std::array<Row, 5> rows = {{{19, 15, {0, 0, 12, 7}, {3, 6, 0}, 1, 48, 27},
                                      {15, 9, {0, 6, 6, 3}, {1, 6, 2}, 2, 24, 54},
                                      {13, 6, {1, 6, 6, 0}, {0, 6, 3}, 2, 12, 108},
                                      {11, 3, {4, 6, 0, 1}, {0, 3, 6}, 3, 24, 54},
                                      {9, 0, {9, 0, 0, 0}, {0, 0, 9}, 3, 108, 12}}};
    std::array<std::set<std::string>, 5> seen;
    std::array<int, 5> crd{};
    for (PointSet h : hyperplanes) {
      ClassSignature s = classify(g, h);
      int stab = 0;
      for (const auto& p : G) stab += p(h) == h ? 1 : 0;
      int t = type_index(s.type);
      std::ostringstream key;
      key << '(' << s.n_points << ',' << s.n_lines << ",(" << join(s.order_profile) << "),(" << s.quad_profile.deep
          << ',' << s.quad_profile.singular << ',' << s.quad_profile.ovoidal << ")," << s.weight << ',' << stab;
      seen[t].insert(key.str());
      ++crd[t];
      const Row& r = rows[t];
      ok3 = ok3 && s.n_points == r.pts && s.n_lines == r.lns && s.order_profile == r.orders &&
            s.quad_profile == r.quads && s.weight == r.weight && stab == r.stab;
    }
    for (int t = 0; t < 5; ++t) {
      const Row& r = rows[t];
      ok3 = ok3 && crd[t] == r.crd && seen[t].size() == 1;
      exp3 << (t ? " " : "") << "H" << t + 1 << "(" << r.pts << ',' << r.lns << ",(" << join(r.orders) << "),("
           << r.quads.deep << ',' << r.quads.singular << ',' << r.quads.ovoidal << ")," << r.weight << ',' << r.stab
           << ',' << r.crd << ')';
      act3 << (t ? " " : "") << "H" << t + 1 << join(seen[t], "|") << ',' << crd[t] << ')';
    }
  }
  add(3, exp3.str(), act3.str(), ok3, w3.seconds(), 5.0);
  add(4, "1296 elements, all automorphisms, transitive on points",
      std::to_string(G.order()) + " elements, " + (automorphisms ? "all automorphisms" : "NOT all automorphisms") +
          ", " + (transitive ? "transitive" : "intransitive"),
      G.order() == kGroupOrder && automorphisms && transitive, t4, 1.0);

  // The remaining checks work on the full model. Construction enforces the
  // group order, so a bad generator set stops here with an exception.
  std::optional<Model> built;
  try {
    built = phase("model", [&] { return build_model(opts.gens); });
  } catch (const std::exception& e) {
    report.build_error = e.what();
    for (int id = 5; id <= 11; ++id)
      report.checks.push_back({id, check_names()[id - 1], "", std::string("not run: ") + e.what(), CheckStatus::Fail, 0, 0});
    std::sort(report.checks.begin(), report.checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
    return report;
  }
  const Model& m = *built;

  // 5
  {
    Stopwatch w;
    VeldkampSpace space = build_space(m.geometry, m.catalog);
    bool axiom = true;
    for (const auto& l : space.lines()) {
      PointSet a = m.catalog[l.members[0]].points, b = m.catalog[l.members[1]].points,
               c = m.catalog[l.members[2]].points;
      PointSet abc = a & b & c;
      axiom = axiom && (a & b) == abc && (a & c) == abc && (b & c) == abc;
    }
    Coordinates co = coordinatize(m.catalog, space);
    std::set<int> images(co.of.begin(), co.of.end());
    bool additive = true;
    for (int x = 0; x < kNumHyperplanes; ++x)
      for (int y = x + 1; y < kNumHyperplanes; ++y) {
        int z = m.catalog.index_of(vsum(m.catalog[x].points, m.catalog[y].points));
        additive = additive && (co.of[x] ^ co.of[y]) == co.of[z];
      }
    bool bijective = images.size() == 255 && !images.contains(0);
    add(5, "10795 lines, line axiom holds, dimension 8, vsum = XOR, bijective",
        std::to_string(space.size()) + " lines, axiom " + (axiom ? "holds" : "fails") + ", additive " +
            (additive ? "yes" : "no") + ", bijective " + (bijective ? "yes" : "no"),
        space.size() == kNumVeldkampLines && axiom && additive && bijective, w.seconds(), 10.0);
  }

  // 6
  {
    Stopwatch w;
    VeldkampSpace space = build_space(m.geometry, m.catalog);
    LineClassification cls = classify_lines(space, m.catalog);
    std::array<int, kNumLineTypes> crd{};
    int total = 0;
    std::vector<std::string> unmatched;
    for (int t = 1; t <= kNumLineTypes; ++t) {
      crd[t - 1] = cls.cardinality(t);
      total += crd[t - 1];
      const CoreProfile& p = cls.profile_of_type[t];
      int full_matches = static_cast<int>(
          std::count_if(kLineTypeRows.begin(), kLineTypeRows.end(), [&](const LineTypeRow& r) { return matches(r, p); }));
      if (full_matches != 1 || !matches(line_type_row(t), p)) {
        const LineTypeRow& r = line_type_row(t);
        auto v = subscript_of(r.subscript, p);
        unmatched.push_back("row " + std::to_string(t) + " " + core_points_notation(r) + " vs computed " +
                            line_type_summary(cls, t).core_points +
                            (v ? "" : " (no refinement value)"));
      }
    }
    bool ok = crd == kExpectedLineCardinalities && total == kNumVeldkampLines && unmatched.empty();
    add(6, "41 orbits, each matching one row on all columns; Crd " + join(kExpectedLineCardinalities) + "; sum 10795",
        "41 orbits; Crd " + join(crd) + "; sum " + std::to_string(total) +
            (unmatched.empty() ? "; all rows match" : "; rows not matched: " + join(unmatched, "; ")),
        ok, w.seconds(), 60.0);
  }

  // 7
  {
    Stopwatch w;
    TypeMatrix t3 = composition_summary(m.classification);
    TypeMatrix t4 = double_coset_table(m.group, m.catalog);
    auto u3 = detail::upper_triangle(t3), u4 = detail::upper_triangle(t4);
    std::vector<std::string> diff;
    for (int a = 0; a < 5; ++a)
      for (int b = a; b < 5; ++b)
        if (t3[a][b] != t4[a][b]) diff.push_back(detail::cell_name(a, b));
    bool ok = std::equal(u3.begin(), u3.end(), kExpectedCompositionTable.begin()) &&
              std::equal(u4.begin(), u4.end(), kExpectedDoubleCosetTable.begin()) &&
              diff == std::vector<std::string>{"(H3,H3)", "(H3,H4)", "(H4,H4)"};
    add(7,
        "Table 3 " + join(kExpectedCompositionTable) + "; Table 4 " + join(kExpectedDoubleCosetTable) +
            "; differ at (H3,H3),(H3,H4),(H4,H4)",
        "Table 3 " + join(u3) + "; Table 4 " + join(u4) + "; differ at " + join(diff), ok, w.seconds(), 60.0);
  }

  // 8
  {
    Stopwatch w;
    const Geometry& gg = m.geometry;
    auto h3 = [&](const char* x, const char* y) { return h3_with_axis(gg, Point::parse(x), Point::parse(y)); };
    PointSet A = h3("000", "222"), B = h3("102", "211"), C = h3("001", "210");
    bool nuclei = nucleus(gg, A) == Point::parse("111") && nucleus(gg, B) == Point::parse("020") &&
                  nucleus(gg, C) == Point::parse("122");
    int a = m.catalog.index_of(A), b = m.catalog.index_of(B), c = m.catalog.index_of(C);
    int line = m.space.line_through(a, b);
    const auto& l = m.space.line(line);
    bool on_line = std::find(l.members.begin(), l.members.end(), c) != l.members.end();
    PointSet expected_core;
    for (const char* s : {"012", "020", "111", "200", "201", "202"}) expected_core.insert(Point::parse(s));

    auto classes = ordered_pair_classes(m.catalog, l.members);
    std::set<std::set<OrderedPair>> got;
    for (const auto& k : classes) got.insert({k.begin(), k.end()});
    std::set<std::set<OrderedPair>> want = {{{a, b}, {b, a}}, {{a, c}, {b, c}}, {{c, a}, {c, b}}};
    std::string actual = std::string("nuclei ") + (nuclei ? "ok" : "wrong") + ", " + (on_line ? "" : "not ") +
                         "a line, core {" + l.core.to_string() + "}, type " + std::to_string(l.type_id) + ", " +
                         std::to_string(classes.size()) + " pair orbits" + (got == want ? " as expected" : "");
    add(8, "a line, core {012 020 111 200 201 202}, type 24, pair orbits {AB,BA} {AC,BC} {CA,CB}", actual,
        nuclei && on_line && l.core == expected_core && l.type_id == 24 && got == want, w.seconds(), 0);
  }

  // 9
  {
    Stopwatch w;
    const auto& cat = m.catalog;
    FormMatrix M = form_matrix(cat, m.coordinates);
    bool bilinear = true, alternating = true, invariant = true;
    for (int x = 0; x < kNumHyperplanes; ++x) {
      alternating = alternating && symplectic_form(cat[x].points, cat[x].points) == 0;
      for (int y = 0; y < kNumHyperplanes; ++y)
        bilinear = bilinear && symplectic_form(cat[x].points, cat[y].points) ==
                                   evaluate(M, m.coordinates.of[x], m.coordinates.of[y]);
    }
    for (const auto& act : cat.induced_action())
      for (int x = 0; x < kNumHyperplanes && invariant; ++x)
        for (int y = x + 1; y < kNumHyperplanes; ++y)
          if (symplectic_form(cat[x].points, cat[y].points) != symplectic_form(cat[act[x]].points, cat[act[y]].points)) {
            invariant = false;
            break;
          }
    int rank = form_rank(M);
    auto forms = invariant_form_space(cat, m.coordinates, m.gens);
    std::vector<FormMatrix> want = {FormMatrix{}, M};
    std::sort(want.begin(), want.end());
    auto [iso, non] = isotropic_line_counts(m.space, cat);  // throws if the two criteria disagree
    std::ostringstream act;
    act << (bilinear ? "bilinear" : "NOT bilinear") << ", " << (alternating ? "alternating" : "NOT alternating")
        << ", rank " << rank << ", " << (invariant ? "invariant" : "NOT invariant") << ", " << forms.size()
        << " invariant forms" << (forms == want ? " {0, B}" : "") << ", isotropic " << iso << "/" << non
        << ", criteria agree";
    add(9, "bilinear, alternating, rank 8, invariant, invariant forms {0, B}, isotropic 5355/5440", act.str(),
        bilinear && alternating && invariant && rank == 8 && forms == want && iso == 5355 && non == 5440,
        w.seconds(), 30.0);
  }

  // 10
  {
    Stopwatch w;
    auto core_of = [&](int t) { return m.space.line(m.classification.representative(t)).core; };
    std::ostringstream act;
    bool ok = true;
    for (int t : {6, 23, 37, 41}) {
      auto n = lines_with_core(m.space, core_of(t)).size();
      act << "type " << t << ": " << n << ", ";
      ok = ok && n > 1;
    }
    auto empty = lines_with_core(m.space, PointSet{});
    bool all41 = std::all_of(empty.begin(), empty.end(), [&](int l) { return m.space.line(l).type_id == 41; });
    auto one = lines_with_core(m.space, core_of(1)).size();
    act << "empty core: " << empty.size() << (all41 ? " (all type 41)" : " (mixed types)") << ", type 1: " << one;
    ok = ok && empty.size() == 4 && all41 && one == 1;
    add(10, "types 6,23,37,41: >1 each, empty core: 4 (all type 41), type 1: 1", act.str(), ok, w.seconds(), 0);
  }

  // 11
  {
    Stopwatch w;
    Model again = build_model(opts.gens);
    std::vector<std::string> differing;
    for (auto [kind, name] : {std::pair{ExportKind::Hyperplanes, "hyperplanes"}, std::pair{ExportKind::Lines, "lines"},
                              std::pair{ExportKind::Graph, "graph"}, std::pair{ExportKind::Orbits, "orbits"},
                              std::pair{ExportKind::LineTypes, "line-types"}})
      if (export_artifact(m, kind) != export_artifact(again, kind)) differing.push_back(name);
    add(11, "two builds give byte-identical exports",
        differing.empty() ? "identical" : "differ: " + join(differing), differing.empty(), w.seconds(), 0);
  }

  std::sort(report.checks.begin(), report.checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return report;
}

inline constexpr int kExitPass = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitIo = 3, kExitBuildFailed = 4;

inline std::string format_report(const RunReport& r);

// kExitPass when every check passes, kExitCheckFailed on a failed check,
// kExitBuildFailed when the pipeline could not be built.
inline int verify_and_report(const VerifyOptions& opts, std::ostream& out) {
  RunReport r = run_verification(opts);
  out << format_report(r);
  if (r.build_error) return kExitBuildFailed;
  return r.passed() ? kExitPass : kExitCheckFailed;
}

inline std::string format_report(const RunReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f s", c.seconds);
    out << to_string(c.status) << "  " << c.id << ' ' << c.name << "  (" << secs;
    if (c.budget_seconds > 0) out << ", budget " << c.budget_seconds << " s";
    out << ")\n    expected: " << c.expected << "\n    actual:   " << c.actual << '\n';
  }
  out << "phases:";
  for (const auto& [name, secs] : r.phases) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " %s %.3f s", name.c_str(), secs);
    out << buf;
  }
  out << '\n';
  int pass = 0, fail = 0, skip = 0;
  for (const auto& c : r.checks) (c.status == CheckStatus::Pass ? pass : c.status == CheckStatus::Fail ? fail : skip)++;
  out << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
  if (r.build_error) out << "pipeline build failed: " << *r.build_error << '\n';
  return out.str();
}

}  // namespace gray27
