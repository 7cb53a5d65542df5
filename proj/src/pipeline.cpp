#include "glyphplot/pipeline.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "glyphplot/parallel.hpp"
#include "glyphplot/projection.hpp"
#include "glyphplot/scales.hpp"

namespace glyphplot {

namespace {

std::vector<GlyphGeometry> build_glyphs_impl(
    std::span<const GlyphWorkItem> items, const Palette& palette,
    bool parallel) {
  std::vector<GlyphGeometry> glyphs(items.size());
  const std::int64_t n = static_cast<std::int64_t>(items.size());
  GLYPHPLOT_PRAGMA_OMP_IF(parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    const GlyphWorkItem& item = items[i];
    glyphs[i] = build_glyph(*item.row, item.center, item.radius, palette,
                            item.tooltip);
  }
  return glyphs;
}

}  // namespace

std::vector<GlyphGeometry> build_glyphs_serial(
    std::span<const GlyphWorkItem> items, const Palette& palette) {
  return build_glyphs_impl(items, palette, false);
}

std::vector<GlyphGeometry> build_glyphs_parallel(
    std::span<const GlyphWorkItem> items, const Palette& palette) {
  return build_glyphs_impl(items, palette, true);
}

std::vector<GlyphGeometry> build_glyphs(std::span<const GlyphWorkItem> items,
                                        const Palette& palette) {
  return build_glyphs_impl(items, palette, parallel_enabled());
}

namespace {

constexpr double kFacetStripHeight = 16.0;
constexpr double kFacetGap = 10.0;

struct LayoutBands {
  Rect plot_region;  // where panels go
};

LayoutBands layout_bands(const PlotSpec& spec, bool map_mode) {
  const double top = spec.labels.title.empty() ? 10.0 : 32.0;
  const double left = map_mode ? 12.0 : 46.0;
  double bottom = map_mode ? 12.0 : 30.0;
  if (!map_mode && !spec.labels.x.empty()) bottom += 14.0;
  const double right_edge = spec.width * 0.85 - 8.0;
  LayoutBands bands;
  bands.plot_region = Rect{left, top, right_edge - left,
                           spec.height - top - bottom};
  return bands;
}

// Distinct facet keys in first-appearance order; one unnamed panel when the
// spec has no facet column.
std::vector<std::string> facet_keys(const Compositions& comps) {
  std::vector<std::string> keys;
  for (const auto& row : comps.rows) {
    if (!row.facet_key) continue;
    if (std::find(keys.begin(), keys.end(), *row.facet_key) == keys.end()) {
      keys.push_back(*row.facet_key);
    }
  }
  return keys;
}

LinearScale with_range(const LinearScale& domain_only, double lo, double hi) {
  return LinearScale{domain_only.domain_min, domain_only.domain_max, lo, hi};
}

}  // namespace

BuildResult build_scene(const PlotSpec& spec, const DataTable& table,
                        const std::optional<GeoLayer>& map) {
  BuildResult result;
  result.diagnostics = validate_spec(spec, table);
  if (has_errors(result.diagnostics)) return result;

  Compositions comps = extract_compositions(spec, table);
  result.diagnostics.insert(result.diagnostics.end(),
                            comps.diagnostics.begin(),
                            comps.diagnostics.end());
  if (has_errors(result.diagnostics)) return result;

  const bool map_mode = spec.projection.has_value();
  Scene& scene = result.scene;
  scene.width = spec.width;
  scene.height = spec.height;
  scene.title = spec.labels.title;
  scene.x_label = spec.labels.x;
  scene.y_label = spec.labels.y;
  scene.glyph_border = spec.border_color;
  scene.map_mode = map_mode;
  scene.interactive = spec.interactive;
  scene.clip_glyphs = spec.clip_glyphs;
  scene.legend = assign_palette(comps.categories, spec.color_overrides);
  if (map) {
    scene.geo_fill = map->fill;
    scene.geo_stroke = map->stroke;
  }

  // Panels. Faceted layouts reserve a strip above each panel for its key.
  const LayoutBands bands = layout_bands(spec, map_mode);
  const std::vector<std::string> keys = facet_keys(comps);
  std::vector<Panel> panels;
  if (keys.empty()) {
    panels.push_back(Panel{bands.plot_region, {}, {}, std::nullopt});
  } else {
    panels = facet_layout(keys, bands.plot_region, std::nullopt, std::nullopt,
                          kFacetGap + kFacetStripHeight);
    for (auto& panel : panels) {
      panel.rect.y += kFacetStripHeight;
      panel.rect.h -= kFacetStripHeight;
    }
  }
  std::unordered_map<std::string, std::size_t> panel_of_key;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    if (panels[i].facet_key) panel_of_key.emplace(*panels[i].facet_key, i);
  }

  // Optional size mapping; fixed pie_radius otherwise.
  std::optional<SizeScale> size_scale;
  if (spec.size_column) {
    std::vector<double> size_values;
    for (const auto& row : comps.rows) {
      if (row.size_value) size_values.push_back(*row.size_value);
    }
    if (!size_values.empty()) {
      size_scale = fit_size_scale(size_values);
    }
  }
  scene.size_scale = size_scale;

  // Anchor -> screen center, per panel.
  std::vector<GeoTransform> geo_transforms(panels.size());
  std::vector<ScreenPoint> centers(comps.rows.size());
  std::vector<std::size_t> panel_index(comps.rows.size(), 0);
  for (std::size_t i = 0; i < comps.rows.size(); ++i) {
    if (comps.rows[i].facet_key) {
      panel_index[i] = panel_of_key.at(*comps.rows[i].facet_key);
    }
  }

  if (map_mode) {
    const Projection proj =
        *parse_projection(*spec.projection, spec.projection_center);
    std::vector<PlanePoint> projected(comps.rows.size());
    Extent extent;
    if (map) extent = projected_extent(*map, proj);
    bool projection_failed = false;
    for (std::size_t i = 0; i < comps.rows.size(); ++i) {
      try {
        projected[i] =
            project(proj, comps.rows[i].anchor_x, comps.rows[i].anchor_y);
      } catch (const DomainError& e) {
        result.diagnostics.push_back(
            make_error(e.code(), "cannot project anchor", table.provenance(),
                       comps.rows[i].row_id));
        projection_failed = true;
        continue;
      }
      extent.extend(projected[i]);
    }
    if (projection_failed) return result;
    if (extent.empty || !(extent.width() > 0.0) ||
        !(extent.height() > 0.0)) {
      // A lone anchor with no basemap still needs a finite window.
      const double cu = extent.empty ? 0.0 : extent.umin;
      const double cv = extent.empty ? 0.0 : extent.vmin;
      extent.extend(PlanePoint{cu - 0.5, cv - 0.5});
      extent.extend(PlanePoint{cu + 0.5, cv + 0.5});
    }
    for (std::size_t p = 0; p < panels.size(); ++p) {
      geo_transforms[p] = fit_geo_scale(extent, panels[p].rect);
    }
    for (std::size_t i = 0; i < comps.rows.size(); ++i) {
      centers[i] = geo_transforms[panel_index[i]].apply(projected[i]);
    }
  } else {
    std::vector<double> xs, ys;
    xs.reserve(comps.rows.size());
    ys.reserve(comps.rows.size());
    for (const auto& row : comps.rows) {
      xs.push_back(row.anchor_x);
      ys.push_back(row.anchor_y);
    }
    // Zero accepted rows still renders axes; fall back to a unit domain.
    if (xs.empty()) {
      xs = {0.0, 1.0};
      ys = {0.0, 1.0};
    }
    const LinearScale x_domain = fit_scale(xs, 0.0, 1.0);
    const LinearScale y_domain = fit_scale(ys, 0.0, 1.0);
    for (auto& panel : panels) {
      panel.x_scale = with_range(x_domain, panel.rect.x, panel.rect.right());
      panel.y_scale = with_range(y_domain, panel.rect.bottom(), panel.rect.y);
    }
    for (std::size_t i = 0; i < comps.rows.size(); ++i) {
      const Panel& panel = panels[panel_index[i]];
      centers[i] = ScreenPoint{panel.x_scale.forward(comps.rows[i].anchor_x),
                               panel.y_scale.forward(comps.rows[i].anchor_y)};
    }
  }

  // Jitter displaces screen centers only; glyph shape never sees it.
  if (spec.jitter) {
    const double amount = spec.jitter->amount.value_or(spec.pie_radius / 2.0);
    const std::vector<JitterOffset> offsets =
        jitter_offsets(comps.rows.size(), amount, spec.jitter->seed);
    for (std::size_t i = 0; i < comps.rows.size(); ++i) {
      centers[i].x += offsets[i].dx;
      centers[i].y += offsets[i].dy;
    }
  }

  std::vector<GlyphWorkItem> items(comps.rows.size());
  for (std::size_t i = 0; i < comps.rows.size(); ++i) {
    GlyphWorkItem& item = items[i];
    item.row = &comps.rows[i];
    item.center = centers[i];
    item.radius = size_scale && comps.rows[i].size_value
                      ? size_radius(*size_scale, *comps.rows[i].size_value)
                      : spec.pie_radius;
    item.panel_index = panel_index[i];
    if (spec.interactive) {
      item.tooltip = to_string(
          tooltip_text(comps.categories, comps.rows[i].values));
    }
  }

  std::vector<GlyphGeometry> glyphs = build_glyphs(items, scene.legend);

  scene.panels.resize(panels.size());
  for (std::size_t p = 0; p < panels.size(); ++p) {
    scene.panels[p].panel = panels[p];
    if (map_mode) {
      if (map) {
        const Projection proj =
            *parse_projection(*spec.projection, spec.projection_center);
        GeoPathResult paths = geo_path(*map, proj, geo_transforms[p]);
        result.diagnostics.insert(result.diagnostics.end(),
                                  paths.diagnostics.begin(),
                                  paths.diagnostics.end());
        scene.panels[p].geo_paths = std::move(paths.paths);
      }
    } else {
      scene.panels[p].x_breaks = nice_breaks(panels[p].x_scale.domain_min,
                                             panels[p].x_scale.domain_max);
      scene.panels[p].y_breaks = nice_breaks(panels[p].y_scale.domain_min,
                                             panels[p].y_scale.domain_max);
    }
  }
  // Draw order inside a panel = input row order (later rows on top).
  for (std::size_t i = 0; i < glyphs.size(); ++i) {
    scene.panels[items[i].panel_index].glyphs.push_back(std::move(glyphs[i]));
  }

  scene.legend_layout = layout_legend(
      scene.legend, scene.size_scale,
      Rect{0.0, 0.0, scene.width, scene.height});

  result.ok = !has_errors(result.diagnostics);
  return result;
}

}  // namespace glyphplot
