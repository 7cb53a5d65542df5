#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "glyphplot/compositions.hpp"
#include "glyphplot/geojson.hpp"
#include "glyphplot/glyph.hpp"
#include "glyphplot/plot_spec.hpp"
#include "glyphplot/scene.hpp"
#include "glyphplot/table.hpp"

namespace glyphplot {

// Everything one glyph needs, resolved ahead of construction. The prepare
// phase does all fallible work (projection, scales, jitter, tooltips)
// serially; building from work items is pure per item.
struct GlyphWorkItem {
  const CompositionRow* row = nullptr;
  ScreenPoint center;
  double radius = 0.0;
  std::optional<std::string> tooltip;
  std::size_t panel_index = 0;
};

// The parallel kernel and its serial reference. Both fill index i of the
// result from items[i] only, so outputs are identical element for element.
std::vector<GlyphGeometry> build_glyphs_serial(
    std::span<const GlyphWorkItem> items, const Palette& palette);
std::vector<GlyphGeometry> build_glyphs_parallel(
    std::span<const GlyphWorkItem> items, const Palette& palette);
// Dispatches on parallel_enabled() (OpenMP build, GLYPHPLOT_NO_PARALLEL).
std::vector<GlyphGeometry> build_glyphs(std::span<const GlyphWorkItem> items,
                                        const Palette& palette);

struct BuildResult {
  Scene scene;
  std::vector<Diagnostic> diagnostics;
  bool ok = false;  // false when any error diagnostic was produced
};

// validate -> extract -> palette -> layout -> scales/projection -> jitter ->
// glyph kernel -> legend. `map` is the pre-loaded boundary layer when the
// spec references one (file loading is the caller's job).
BuildResult build_scene(const PlotSpec& spec, const DataTable& table,
                        const std::optional<GeoLayer>& map = std::nullopt);

}  // namespace glyphplot
