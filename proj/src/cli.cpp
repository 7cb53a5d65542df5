#include "glyphplot/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <system_error>

#include "CLI11.hpp"
#include "glyphplot/diagnostics.hpp"
#include "glyphplot/geojson.hpp"
#include "glyphplot/pipeline.hpp"
#include "glyphplot/plot_spec.hpp"
#include "glyphplot/scene.hpp"
#include "glyphplot/table.hpp"

namespace glyphplot {

namespace {

void print_diagnostics(const std::vector<Diagnostic>& diags,
                       std::ostream& err) {
  for (const auto& d : diags) err << to_string(d) << '\n';
}

// Write-to-temp then rename, so out_path is either the previous file or the
// complete new one — never a partial document.
bool write_atomic(const std::string& out_path, const std::string& content) {
  const std::string temp_path = out_path + ".tmp";
  {
    std::ofstream out(temp_path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      std::filesystem::remove(temp_path, ec);
      return false;
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp_path, out_path, ec);
  if (ec) {
    std::filesystem::remove(temp_path, ec);
    return false;
  }
  return true;
}

}  // namespace

ParsedArgs parse_args(int argc, const char* const* argv) {
  ParsedArgs parsed;
  CLI::App app{"Render pie-glyph scatter and map plots from CSV data"};
  app.name("glyphplot");

  RunConfig& config = parsed.config;
  app.add_option("--data", config.data_path, "Input CSV file")->required();
  app.add_option("--spec", config.spec_path, "Plot spec JSON file")
      ->required();
  app.add_option("--out", config.out_path, "Output document path")
      ->required();
  double width = 0.0, height = 0.0;
  auto* width_opt = app.add_option("--width", width, "Override output width")
                        ->check(CLI::PositiveNumber);
  auto* height_opt =
      app.add_option("--height", height, "Override output height")
          ->check(CLI::PositiveNumber);
  std::string projection;
  auto* proj_opt = app.add_option(
      "--projection", projection,
      "Override map projection (equirectangular, mercator, lambert)");
  std::uint64_t seed = 0;
  auto* seed_opt =
      app.add_option("--seed", seed, "Override the jitter seed");
  app.add_flag("--interactive", config.interactive,
               "Attach hover tooltips regardless of the spec file");
  app.add_flag("--verbose", config.verbose, "Report progress on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    parsed.exit_code = kExitOk;
    parsed.message = app.help();
    return parsed;
  } catch (const CLI::ParseError& e) {
    parsed.exit_code = kExitUsage;
    parsed.message = std::string(e.what()) + "\n\n" + app.help();
    return parsed;
  }

  if (*width_opt) config.width = width;
  if (*height_opt) config.height = height;
  if (*proj_opt) config.projection = projection;
  if (*seed_opt) config.seed = seed;
  return parsed;
}

int run(const RunConfig& config, std::ostream& err) {
  SpecParseResult spec_result = spec_from_file(config.spec_path);
  print_diagnostics(spec_result.diagnostics, err);
  if (has_errors(spec_result.diagnostics)) return kExitError;

  PlotSpec spec = spec_result.spec;
  if (config.width) spec.width = *config.width;
  if (config.height) spec.height = *config.height;
  if (config.projection) spec.projection = *config.projection;
  if (config.interactive) spec.interactive = true;
  if (config.seed) {
    if (spec.jitter) {
      spec.jitter->seed = *config.seed;
    } else {
      spec.jitter = JitterSpec{std::nullopt, *config.seed};
    }
  }

  CsvResult csv = read_csv_file(config.data_path);
  print_diagnostics(csv.diagnostics, err);
  if (has_errors(csv.diagnostics)) return kExitError;

  std::optional<GeoLayer> map;
  if (spec.map_source) {
    // Relative map paths resolve against the spec file, not the cwd, so a
    // spec + map pair can move around as a unit.
    std::filesystem::path map_path = *spec.map_source;
    if (map_path.is_relative()) {
      map_path =
          std::filesystem::path(config.spec_path).parent_path() / map_path;
    }
    GeoParseResult geo = load_geojson(map_path.string());
    print_diagnostics(geo.diagnostics, err);
    if (has_errors(geo.diagnostics)) return kExitError;
    map = std::move(geo.layer);
  }

  BuildResult built = build_scene(spec, csv.table, map);
  print_diagnostics(built.diagnostics, err);
  if (!built.ok) return kExitError;

  const std::string document = render_scene(built.scene);
  if (!write_atomic(config.out_path, document)) {
    err << "error: " << config.out_path
        << ": cannot write output file [OutputWriteFailed]\n";
    return kExitError;
  }
  if (config.verbose) {
    err << "wrote " << config.out_path << " (" << document.size()
        << " bytes, "
        << (built.scene.panels.empty() ? 0 : built.scene.panels.size())
        << " panel(s))\n";
  }
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  ParsedArgs parsed = parse_args(argc, argv);
  if (parsed.exit_code) {
    (*parsed.exit_code == kExitOk ? out : err) << parsed.message << '\n';
    return *parsed.exit_code;
  }
  return run(parsed.config, err);
}

}  // namespace glyphplot
