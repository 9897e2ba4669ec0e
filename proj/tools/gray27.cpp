#include <cstdint>
#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gray27/gray27.hpp"

namespace {

using namespace gray27;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::map<std::string, TableFormat> kTableFormats = {
    {"text", TableFormat::Text}, {"csv", TableFormat::Csv}, {"json", TableFormat::Json}};

struct ExportTarget {
  ExportKind kind;
  const char* format;
};

const std::map<std::string, ExportTarget> kExports = {
    {"hyperplanes", {ExportKind::Hyperplanes, "json"}}, {"lines", {ExportKind::Lines, "csv"}},
    {"graph", {ExportKind::Graph, "dot"}},             {"orbits", {ExportKind::Orbits, "json"}},
    {"line-types", {ExportKind::LineTypes, "json"}},
};

int run_show(const Model& m, std::uint32_t id, bool by_index, const std::string& format) {
  std::optional<int> idx;
  if (by_index) {
    if (id < m.catalog.size()) idx = static_cast<int>(id);
  } else if (id <= PointSet::kFullMask) {
    idx = m.catalog.find(PointSet(id));
  }
  if (!idx) throw UsageError("no hyperplane with " + std::string(by_index ? "index " : "id ") + std::to_string(id));
  PointSet h = m.catalog[*idx].points;
  std::cout << (format == "svg" ? render_svg(m.geometry, h) : render_ascii(m.geometry, h));
  return kExitPass;
}

int run_export(const Model& m, const std::string& what, const std::string& out, const std::string& format) {
  const ExportTarget& target = kExports.at(what);
  if (!format.empty() && format != target.format)
    throw UsageError("export " + what + " is only available as " + target.format);
  std::string content = export_artifact(m, target.kind);
  if (out == "-") {
    std::cout << content;
  } else {
    write_file(out, content);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperplanes, Veldkamp lines and automorphisms of the 3x3x3 grid"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Build everything and check every claim");
  bool oracle = false;
  verify->add_flag("--oracle", oracle, "Also run the exhaustive 2^27 subset scan");

  auto* tables = app.add_subcommand("tables", "Print a computed table");
  int which = 0;
  std::string table_format = "text";
  tables->add_option("which", which, "Table: 1 hyperplanes, 2 line types, 3 compositions, 4 double cosets")
      ->required();
  tables->add_option("--format", table_format)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* show = app.add_subcommand("show", "Draw one hyperplane");
  std::uint32_t show_id = 0;
  bool by_index = false;
  std::string show_format = "ascii";
  show->add_option("id", show_id, "Hyperplane id (point-set mask, as exported)")->required();
  show->add_flag("--index", by_index, "Treat id as a catalog position 0..254");
  show->add_option("--format", show_format)->check(CLI::IsMember({"ascii", "svg"}));

  auto* exp = app.add_subcommand("export", "Write an artifact");
  std::string what, out_path, export_format;
  exp->add_option("what", what)->required()->check(CLI::IsMember({"hyperplanes", "lines", "graph", "orbits", "line-types"}));
  exp->add_option("--out", out_path, "Output path, or - for stdout")->required();
  exp->add_option("--format", export_format, "json, csv or dot; must match the artifact");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) {
      VerifyOptions opts;
      opts.oracle = oracle;
      return verify_and_report(opts, std::cout);
    }
    if (*tables && (which < 1 || which > 4)) throw UsageError("unknown table " + std::to_string(which));

    std::optional<Model> built;
    try {
      built = build_model();
    } catch (const std::exception& e) {
      std::cerr << "error: pipeline build failed: " << e.what() << '\n';
      return kExitBuildFailed;
    }
    const Model& m = *built;
    if (*tables) {
      std::cout << render_table(m, which, kTableFormats.at(table_format));
      return kExitPass;
    }
    if (*show) return run_show(m, show_id, by_index, show_format);
    if (*exp) return run_export(m, what, out_path, export_format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ExportError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
