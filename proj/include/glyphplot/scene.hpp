#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glyphplot/geometry.hpp"
#include "glyphplot/glyph.hpp"
#include "glyphplot/scales.hpp"

namespace glyphplot {

// Hover text: one line per category, zero slices included.
struct TooltipText {
  std::vector<std::string> lines;  // "<category>: <raw> (<pct>%)"
};

// Raw values print with up to 2 decimals (integers bare); percentages are
// 100 v / sum(v) rounded half-up to exactly 1 decimal. Percentages are not
// forced to sum to 100. Throws DomainError("AllZeroComposition").
TooltipText tooltip_text(std::span<const std::string> categories,
                         std::span<const double> raw_values);

// Lines joined with '\n'.
std::string to_string(const TooltipText& tooltip);

// Fixed 8-color default cycle; overrides replace by exact category name.
Palette assign_palette(const std::vector<std::string>& categories,
                       const std::map<std::string, std::string>& overrides);

struct SwatchRow {
  Rect swatch;
  ScreenPoint label_pos;
  std::string label;
  std::string color;
};

struct SizeRef {
  ScreenPoint center;
  double radius = 0.0;
  ScreenPoint label_pos;
  std::string label;
};

struct LegendLayout {
  Rect margin;  // reserved right band
  std::vector<SwatchRow> swatches;
  std::vector<SizeRef> size_refs;  // min/mid/max reference circles
};

// Vertical swatch list top-aligned in the right 15% of `plot_rect`; when a
// size scale exists, 3 reference circles (domain min/mid/max) stack below
// the swatches. Purely geometric — no text measurement.
LegendLayout layout_legend(const Palette& palette,
                           const std::optional<SizeScale>& size_scale,
                           Rect plot_rect);

// One facet panel, fully resolved: placement, scales, breaks, pre-built
// boundary paths, and the glyphs anchored inside it.
struct PanelScene {
  Panel panel;
  std::vector<double> x_breaks;  // data-space positions; empty on maps
  std::vector<double> y_breaks;
  std::vector<std::string> geo_paths;  // screen-space "M ... Z" strings
  std::vector<GlyphGeometry> glyphs;
};

// Resolved render tree. Emission only serializes; nothing here can fail.
struct Scene {
  double width = 600.0;
  double height = 450.0;
  std::string title;
  std::string x_label;
  std::string y_label;
  std::string background = "#ffffff";
  std::string glyph_border = "#ffffff";
  std::string geo_fill = "#ede9dd";
  std::string geo_stroke = "#9a9a9a";
  bool map_mode = false;  // suppresses gridlines and tick labels
  bool interactive = false;
  bool clip_glyphs = false;
  std::vector<PanelScene> panels;
  Palette legend;  // global category order
  std::optional<SizeScale> size_scale;
  LegendLayout legend_layout;
};

// Emits the standalone XML document. Paint order: background, per panel
// [geo paths, gridlines, axes, glyphs], legend, title. Each glyph is a
// <g class="glyph" transform="translate(cx cy)"> whose sector paths are in
// glyph-local coordinates, so the path bytes depend only on radius, angles,
// and colors — never on where the glyph sits. When interactive, every
// sector carries a <title> child with the full tooltip. Byte-deterministic.
std::string render_scene(const Scene& scene);

}  // namespace glyphplot
