#include "glyphplot/scene.hpp"

#include <array>
#include <string>

#include "glyphplot/diagnostics.hpp"
#include "glyphplot/numeric.hpp"

namespace glyphplot {

namespace {

constexpr std::array<const char*, 8> kDefaultPalette = {
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a",
    "#66a61e", "#e6ab02", "#a6761d", "#666666",
};

constexpr double kSwatchSize = 12.0;
constexpr double kSwatchRowHeight = 20.0;
constexpr double kLegendPad = 8.0;
constexpr double kFacetStripHeight = 16.0;

}  // namespace

TooltipText tooltip_text(std::span<const std::string> categories,
                         std::span<const double> raw_values) {
  if (categories.size() != raw_values.size()) {
    throw DomainError("TooltipArity",
                      "category and value counts differ");
  }
  double total = 0.0;
  for (double v : raw_values) total += v;
  if (!(total > 0.0)) {
    throw DomainError("AllZeroComposition",
                      "tooltip requires a positive slice total");
  }
  TooltipText tooltip;
  tooltip.lines.reserve(categories.size());
  for (std::size_t i = 0; i < categories.size(); ++i) {
    const double pct = 100.0 * raw_values[i] / total;
    tooltip.lines.push_back(categories[i] + ": " +
                            format_number(raw_values[i], 2) + " (" +
                            format_fixed(pct, 1) + "%)");
  }
  return tooltip;
}

std::string to_string(const TooltipText& tooltip) {
  std::string text;
  for (std::size_t i = 0; i < tooltip.lines.size(); ++i) {
    if (i > 0) text += '\n';
    text += tooltip.lines[i];
  }
  return text;
}

Palette assign_palette(const std::vector<std::string>& categories,
                       const std::map<std::string, std::string>& overrides) {
  Palette palette;
  palette.reserve(categories.size());
  for (std::size_t i = 0; i < categories.size(); ++i) {
    auto it = overrides.find(categories[i]);
    const std::string color =
        it != overrides.end() ? it->second
                              : kDefaultPalette[i % kDefaultPalette.size()];
    palette.emplace_back(categories[i], color);
  }
  return palette;
}

LegendLayout layout_legend(const Palette& palette,
                           const std::optional<SizeScale>& size_scale,
                           Rect plot_rect) {
  LegendLayout layout;
  layout.margin = Rect{plot_rect.x + plot_rect.w * 0.85, plot_rect.y,
                       plot_rect.w * 0.15, plot_rect.h};
  const double x = layout.margin.x + kLegendPad;
  double y = layout.margin.y + 30.0;
  for (const auto& [category, color] : palette) {
    SwatchRow row;
    row.swatch = Rect{x, y, kSwatchSize, kSwatchSize};
    row.label_pos = ScreenPoint{x + kSwatchSize + 6.0, y + kSwatchSize - 2.0};
    row.label = category;
    row.color = color;
    layout.swatches.push_back(std::move(row));
    y += kSwatchRowHeight;
  }
  if (size_scale) {
    y += 14.0;
    const std::array<double, 3> values = {
        size_scale->vmin, (size_scale->vmin + size_scale->vmax) / 2.0,
        size_scale->vmax};
    for (double v : values) {
      const double r = size_radius(*size_scale, v);
      SizeRef ref;
      ref.center = ScreenPoint{x + size_scale->r_max, y + size_scale->r_max};
      ref.radius = r;
      ref.label_pos = ScreenPoint{x + 2.0 * size_scale->r_max + 6.0,
                                  y + size_scale->r_max + 4.0};
      ref.label = format_number(v, 2);
      layout.size_refs.push_back(std::move(ref));
      y += 2.0 * size_scale->r_max + 6.0;
    }
  }
  return layout;
}

namespace {

// Small append helpers; every number goes through format_number so the
// document is reproducible byte for byte.
void attr(std::string& out, const char* name, const std::string& value) {
  out += ' ';
  out += name;
  out += "=\"";
  out += value;
  out += '"';
}

void attr(std::string& out, const char* name, double value) {
  attr(out, name, format_number(value));
}

void text_element(std::string& out, double x, double y,
                  const std::string& anchor, int font_size,
                  const std::string& fill, const std::string& content,
                  const std::string& transform = {},
                  const char* class_name = nullptr) {
  out += "<text";
  if (class_name != nullptr) attr(out, "class", class_name);
  attr(out, "x", x);
  attr(out, "y", y);
  attr(out, "text-anchor", anchor);
  attr(out, "font-size", static_cast<double>(font_size));
  attr(out, "fill", fill);
  if (!transform.empty()) attr(out, "transform", transform);
  out += '>';
  out += xml_escape(content);
  out += "</text>\n";
}

void line_element(std::string& out, double x1, double y1, double x2, double y2,
                  const char* stroke) {
  out += "<line";
  attr(out, "x1", x1);
  attr(out, "y1", y1);
  attr(out, "x2", x2);
  attr(out, "y2", y2);
  attr(out, "stroke", stroke);
  out += "/>\n";
}

void emit_glyph(std::string& out, const GlyphGeometry& glyph,
                const Scene& scene) {
  out += "<g class=\"glyph\" transform=\"translate(";
  out += format_number(glyph.center.x);
  out += ' ';
  out += format_number(glyph.center.y);
  out += ")\">";

  const std::string title =
      scene.interactive && glyph.tooltip
          ? "<title>" + xml_escape(*glyph.tooltip) + "</title>"
          : std::string{};

  // A lone sector spans the whole circle; arcs with coincident endpoints
  // are ambiguous, so it draws as a disc.
  if (glyph.sectors.size() == 1) {
    const CircleElement disc =
        full_circle(ScreenPoint{0.0, 0.0}, glyph.radius,
                    glyph.sectors.front().fill);
    out += "<circle class=\"sector\"";
    attr(out, "cx", disc.center.x);
    attr(out, "cy", disc.center.y);
    attr(out, "r", disc.radius);
    attr(out, "fill", disc.fill);
    attr(out, "stroke", scene.glyph_border);
    if (title.empty()) {
      out += "/>";
    } else {
      out += '>';
      out += title;
      out += "</circle>";
    }
  } else {
    for (const auto& sector : glyph.sectors) {
      out += "<path class=\"sector\"";
      attr(out, "d", sector_path(ScreenPoint{0.0, 0.0}, glyph.radius, sector));
      attr(out, "fill", sector.fill);
      attr(out, "stroke", scene.glyph_border);
      if (title.empty()) {
        out += "/>";
      } else {
        out += '>';
        out += title;
        out += "</path>";
      }
    }
  }
  out += "</g>\n";
}

void emit_panel(std::string& out, const Scene& scene, const PanelScene& ps,
                std::size_t index) {
  const Rect& rect = ps.panel.rect;
  out += "<g class=\"panel\">\n";

  // Facet strip sits immediately above the panel area.
  if (ps.panel.facet_key) {
    out += "<rect class=\"facet-strip\"";
    attr(out, "x", rect.x);
    attr(out, "y", rect.y - kFacetStripHeight);
    attr(out, "width", rect.w);
    attr(out, "height", kFacetStripHeight);
    attr(out, "fill", "#ececec");
    out += "/>\n";
    text_element(out, rect.center_x(), rect.y - 4.0, "middle", 11, "#333333",
                 *ps.panel.facet_key);
  }

  for (const auto& path : ps.geo_paths) {
    out += "<path class=\"geo\"";
    attr(out, "d", path);
    attr(out, "fill", scene.geo_fill);
    attr(out, "fill-rule", std::string("evenodd"));
    attr(out, "stroke", scene.geo_stroke);
    out += "/>\n";
  }

  if (!scene.map_mode) {
    for (double b : ps.x_breaks) {
      const double sx = ps.panel.x_scale.forward(b);
      line_element(out, sx, rect.y, sx, rect.bottom(), "#e2e2e2");
    }
    for (double b : ps.y_breaks) {
      const double sy = ps.panel.y_scale.forward(b);
      line_element(out, rect.x, sy, rect.right(), sy, "#e2e2e2");
    }
    for (double b : ps.x_breaks) {
      const double sx = ps.panel.x_scale.forward(b);
      text_element(out, sx, rect.bottom() + 14.0, "middle", 10, "#555555",
                   format_number(b, 6), {}, "tick");
    }
    for (double b : ps.y_breaks) {
      const double sy = ps.panel.y_scale.forward(b);
      text_element(out, rect.x - 6.0, sy + 3.0, "end", 10, "#555555",
                   format_number(b, 6), {}, "tick");
    }
  }

  out += "<rect class=\"frame\"";
  attr(out, "x", rect.x);
  attr(out, "y", rect.y);
  attr(out, "width", rect.w);
  attr(out, "height", rect.h);
  attr(out, "fill", std::string("none"));
  attr(out, "stroke", "#b0b0b0");
  out += "/>\n";

  if (scene.clip_glyphs) {
    out += "<g clip-path=\"url(#panel-clip-" + std::to_string(index) + ")\">\n";
  }
  for (const auto& glyph : ps.glyphs) {
    emit_glyph(out, glyph, scene);
  }
  if (scene.clip_glyphs) out += "</g>\n";
  out += "</g>\n";
}

}  // namespace

std::string render_scene(const Scene& scene) {
  std::string out;
  out.reserve(4096 + scene.panels.size() * 1024);
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\"";
  attr(out, "width", scene.width);
  attr(out, "height", scene.height);
  attr(out, "viewBox",
       "0 0 " + format_number(scene.width) + ' ' +
           format_number(scene.height));
  attr(out, "font-family", std::string("sans-serif"));
  out += ">\n";

  out += "<rect class=\"background\"";
  attr(out, "x", 0.0);
  attr(out, "y", 0.0);
  attr(out, "width", scene.width);
  attr(out, "height", scene.height);
  attr(out, "fill", scene.background);
  out += "/>\n";

  if (scene.clip_glyphs && !scene.panels.empty()) {
    out += "<defs>\n";
    for (std::size_t i = 0; i < scene.panels.size(); ++i) {
      const Rect& rect = scene.panels[i].panel.rect;
      out += "<clipPath id=\"panel-clip-" + std::to_string(i) + "\"><rect";
      attr(out, "x", rect.x);
      attr(out, "y", rect.y);
      attr(out, "width", rect.w);
      attr(out, "height", rect.h);
      out += "/></clipPath>\n";
    }
    out += "</defs>\n";
  }

  for (std::size_t i = 0; i < scene.panels.size(); ++i) {
    emit_panel(out, scene, scene.panels[i], i);
  }

  const LegendLayout& legend = scene.legend_layout;
  if (!legend.swatches.empty() || !legend.size_refs.empty()) {
    out += "<g class=\"legend\">\n";
    for (const auto& row : legend.swatches) {
      out += "<rect";
      attr(out, "x", row.swatch.x);
      attr(out, "y", row.swatch.y);
      attr(out, "width", row.swatch.w);
      attr(out, "height", row.swatch.h);
      attr(out, "fill", row.color);
      out += "/>\n";
      text_element(out, row.label_pos.x, row.label_pos.y, "start", 11,
                   "#333333", row.label);
    }
    for (const auto& ref : legend.size_refs) {
      out += "<circle";
      attr(out, "cx", ref.center.x);
      attr(out, "cy", ref.center.y);
      attr(out, "r", ref.radius);
      attr(out, "fill", std::string("none"));
      attr(out, "stroke", "#666666");
      out += "/>\n";
      text_element(out, ref.label_pos.x, ref.label_pos.y, "start", 10,
                   "#333333", ref.label);
    }
    out += "</g>\n";
  }

  const double plot_center_x = scene.width * 0.85 / 2.0;
  if (!scene.title.empty()) {
    text_element(out, plot_center_x, 20.0, "middle", 16, "#222222",
                 scene.title, {}, "title");
  }
  if (!scene.map_mode && !scene.x_label.empty()) {
    text_element(out, plot_center_x, scene.height - 8.0, "middle", 12,
                 "#333333", scene.x_label, {}, "x-label");
  }
  if (!scene.map_mode && !scene.y_label.empty()) {
    const std::string transform = "rotate(-90 14 " +
                                  format_number(scene.height / 2.0) + ")";
    text_element(out, 14.0, scene.height / 2.0, "middle", 12, "#333333",
                 scene.y_label, transform, "y-label");
  }

  out += "</svg>\n";
  return out;
}

}  // namespace glyphplot
