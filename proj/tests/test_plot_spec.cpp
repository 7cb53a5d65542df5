#include "doctest.h"
#include "glyphplot/plot_spec.hpp"

#include <string>

using namespace glyphplot;

namespace {

// Reports every diagnostic's code for failure messages.
std::string codes_of(const std::vector<Diagnostic>& diags) {
  std::string out;
  for (const auto& d : diags) {
    if (!out.empty()) out += ", ";
    out += d.code;
  }
  return out;
}

constexpr const char* kFullSpec = R"({
  "mapping": {
    "x": "lon", "y": "lat",
    "slices": ["north", "south"],
    "size": "population",
    "facet": "region"
  },
  "glyph": {
    "radius": 7.5,
    "border": "#222222",
    "clip": true,
    "colors": {"north": "#112233", "south": "#445566"}
  },
  "map": {
    "geojson": "coast.geojson",
    "projection": "mercator",
    "center": [10, 52]
  },
  "jitter": {"amount": 1.5, "seed": 99},
  "labels": {"title": "T", "x": "X", "y": "Y"},
  "size": {"width": 800, "height": 500},
  "interactive": true,
  "skip_incomplete_rows": true
})";

}  // namespace

TEST_CASE("spec_from_json reads every field of a full spec") {
  const SpecParseResult result = spec_from_json(kFullSpec, "plots/full.json");
  INFO("diagnostics: ", codes_of(result.diagnostics));
  REQUIRE(result.diagnostics.empty());

  const PlotSpec& spec = result.spec;
  CHECK(spec.x_column == "lon");
  CHECK(spec.y_column == "lat");
  const auto* wide = std::get_if<WideSlices>(&spec.slices);
  REQUIRE(wide != nullptr);
  CHECK(wide->columns == std::vector<std::string>{"north", "south"});
  CHECK(spec.size_column == "population");
  CHECK(spec.facet_column == "region");

  CHECK(spec.pie_radius == 7.5);
  CHECK(spec.border_color == "#222222");
  CHECK(spec.clip_glyphs);
  REQUIRE(spec.color_overrides.size() == 2);
  CHECK(spec.color_overrides.at("north") == "#112233");
  CHECK(spec.color_overrides.at("south") == "#445566");

  CHECK(spec.map_source == "coast.geojson");
  CHECK(spec.projection == "mercator");
  CHECK(spec.projection_center[0] == 10.0);
  CHECK(spec.projection_center[1] == 52.0);

  REQUIRE(spec.jitter.has_value());
  CHECK(spec.jitter->amount == 1.5);
  CHECK(spec.jitter->seed == 99);

  CHECK(spec.labels.title == "T");
  CHECK(spec.labels.x == "X");
  CHECK(spec.labels.y == "Y");
  CHECK(spec.width == 800.0);
  CHECK(spec.height == 500.0);
  CHECK(spec.interactive);
  CHECK(spec.skip_incomplete_rows);
  CHECK(spec.provenance == "plots/full.json");
}

TEST_CASE("spec_from_json applies documented defaults") {
  const SpecParseResult result = spec_from_json(
      R"({"mapping": {"x": "x", "y": "y", "slices": ["a"]}})", "min.json");
  REQUIRE(result.diagnostics.empty());

  const PlotSpec& spec = result.spec;
  CHECK(spec.pie_radius == 10.0);
  CHECK(spec.border_color == "#ffffff");
  CHECK(!spec.clip_glyphs);
  CHECK(spec.color_overrides.empty());
  CHECK(!spec.size_column.has_value());
  CHECK(!spec.facet_column.has_value());
  CHECK(!spec.map_source.has_value());
  CHECK(!spec.projection.has_value());
  CHECK(!spec.jitter.has_value());
  CHECK(spec.labels.title.empty());
  CHECK(spec.width == 600.0);
  CHECK(spec.height == 450.0);
  CHECK(!spec.interactive);
  CHECK(!spec.skip_incomplete_rows);
}

TEST_CASE("spec_from_json reads long-form slices") {
  const SpecParseResult result = spec_from_json(R"({
    "mapping": {
      "x": "x", "y": "y",
      "slices_long": {
        "category": "age_group",
        "value": "mothers",
        "group_by": ["country"]
      }
    }
  })", "long.json");
  REQUIRE(result.diagnostics.empty());

  const auto* lng = std::get_if<LongSlices>(&result.spec.slices);
  REQUIRE(lng != nullptr);
  CHECK(lng->category_column == "age_group");
  CHECK(lng->value_column == "mothers");
  CHECK(lng->group_columns == std::vector<std::string>{"country"});
}

TEST_CASE("spec_from_json rejects malformed JSON with the file named") {
  const SpecParseResult result = spec_from_json("{not json", "bad.json");
  REQUIRE(result.diagnostics.size() == 1);
  CHECK(result.diagnostics[0].code == "SpecParse");
  CHECK(result.diagnostics[0].file == "bad.json");
  CHECK(result.diagnostics[0].severity == Severity::kError);
}

TEST_CASE("spec_from_json rejects a top-level array") {
  const SpecParseResult result = spec_from_json("[1, 2]", "arr.json");
  CHECK(has_code(result.diagnostics, "SpecParse"));
}

TEST_CASE("spec_from_json requires the mapping object") {
  const SpecParseResult result = spec_from_json(R"({"size": {}})", "s.json");
  REQUIRE(has_code(result.diagnostics, "SpecSchema"));
  bool mentions_mapping = false;
  for (const auto& d : result.diagnostics) {
    mentions_mapping |= d.message.find("mapping") != std::string::npos;
  }
  CHECK(mentions_mapping);
}

TEST_CASE("spec_from_json requires exactly one slice form") {
  const char* both = R"({
    "mapping": {
      "x": "x", "y": "y",
      "slices": ["a"],
      "slices_long": {"category": "c", "value": "v"}
    }
  })";
  CHECK(has_code(spec_from_json(both, "s.json").diagnostics, "SpecSchema"));

  const char* neither = R"({"mapping": {"x": "x", "y": "y"}})";
  CHECK(has_code(spec_from_json(neither, "s.json").diagnostics, "SpecSchema"));
}

TEST_CASE("spec_from_json flags wrong-typed fields without crashing") {
  const char* text = R"({
    "mapping": {"x": 5, "y": "y", "slices": ["a", 3]},
    "glyph": {"radius": "big"},
    "map": {"center": [1]},
    "jitter": {"amount": -1, "seed": "abc"}
  })";
  const SpecParseResult result = spec_from_json(text, "s.json");
  int schema_errors = 0;
  for (const auto& d : result.diagnostics) {
    if (d.code == "SpecSchema") {
      ++schema_errors;
      CHECK(d.file == "s.json");
    }
  }
  // x, slices, radius, center, amount, seed all malformed.
  CHECK(schema_errors == 6);
}

TEST_CASE("spec_from_json warns about unknown top-level keys") {
  const SpecParseResult result = spec_from_json(R"({
    "mapping": {"x": "x", "y": "y", "slices": ["a"]},
    "legend": {"position": "left"}
  })", "s.json");
  REQUIRE(result.diagnostics.size() == 1);
  CHECK(result.diagnostics[0].code == "UnknownSpecKey");
  CHECK(result.diagnostics[0].severity == Severity::kWarning);
  CHECK(result.diagnostics[0].message.find("legend") != std::string::npos);
  CHECK(!has_errors(result.diagnostics));
}

TEST_CASE("spec_from_json validates radius and dimensions") {
  const SpecParseResult result = spec_from_json(R"({
    "mapping": {"x": "x", "y": "y", "slices": ["a"]},
    "glyph": {"radius": 0},
    "size": {"width": -600, "height": 450}
  })", "s.json");
  CHECK(has_code(result.diagnostics, "InvalidRadius"));
  CHECK(has_code(result.diagnostics, "InvalidDimensions"));
}

TEST_CASE("spec_from_file parses the shipped demo spec") {
  const std::string path =
      std::string(GLYPHPLOT_ASSET_DIR) + "/games_spec.json";
  const SpecParseResult result = spec_from_file(path);
  REQUIRE(result.diagnostics.empty());

  const PlotSpec& spec = result.spec;
  CHECK(spec.x_column == "user_score");
  CHECK(spec.y_column == "critic_score");
  const auto* wide = std::get_if<WideSlices>(&spec.slices);
  REQUIRE(wide != nullptr);
  CHECK(wide->columns.size() == 4);
  REQUIRE(spec.jitter.has_value());
  CHECK(spec.jitter->amount == 2.0);
  CHECK(spec.jitter->seed == 7);
  CHECK(spec.provenance == path);
}

TEST_CASE("spec_from_file reports a missing file") {
  const SpecParseResult result = spec_from_file("/no/such/spec.json");
  REQUIRE(result.diagnostics.size() == 1);
  CHECK(result.diagnostics[0].code == "FileNotFound");
  CHECK(result.diagnostics[0].file == "/no/such/spec.json");
  CHECK(result.spec.provenance == "/no/such/spec.json");
}
