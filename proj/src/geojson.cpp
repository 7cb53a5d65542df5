#include "glyphplot/geojson.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include "glyphplot/numeric.hpp"
#include "glyphplot/parallel.hpp"
#include "json.hpp"

namespace glyphplot {

namespace {

using nlohmann::json;

std::string feature_id(const json& feature, std::size_t index) {
  auto props = feature.find("properties");
  if (props != feature.end() && props->is_object()) {
    auto id = props->find("id");
    if (id != props->end() && id->is_string()) return id->get<std::string>();
  }
  auto id = feature.find("id");
  if (id != feature.end()) {
    if (id->is_string()) return id->get<std::string>();
    if (id->is_number_integer()) return std::to_string(id->get<std::int64_t>());
  }
  return "feature " + std::to_string(index);
}

std::optional<GeoRing> read_ring(const json& coords, const std::string& id,
                                 const std::string& provenance,
                                 std::vector<Diagnostic>& diags) {
  GeoRing ring;
  if (!coords.is_array()) {
    diags.push_back(make_error("GeoJsonSchema",
                               "ring of '" + id + "' is not an array",
                               provenance));
    return std::nullopt;
  }
  for (const auto& pt : coords) {
    if (!pt.is_array() || pt.size() < 2 || !pt[0].is_number() ||
        !pt[1].is_number()) {
      diags.push_back(make_error(
          "GeoJsonSchema", "ring of '" + id + "' has a malformed coordinate",
          provenance));
      return std::nullopt;
    }
    ring.points.push_back({pt[0].get<double>(), pt[1].get<double>()});
  }
  if (ring.points.size() < 4) {
    diags.push_back(make_error(
        "TooFewRingPoints",
        "ring of '" + id + "' has fewer than 4 points", provenance));
    return std::nullopt;
  }
  if (ring.points.front() != ring.points.back()) {
    diags.push_back(make_error(
        "UnclosedRing",
        "ring of '" + id + "' is not closed (first point != last point)",
        provenance));
    return std::nullopt;
  }
  return ring;
}

void read_polygon(const json& coords, GeoFeature& feature,
                  const std::string& provenance,
                  std::vector<Diagnostic>& diags) {
  if (!coords.is_array()) {
    diags.push_back(make_error("GeoJsonSchema",
                               "polygon of '" + feature.id +
                                   "' has malformed coordinates",
                               provenance));
    return;
  }
  for (const auto& ring_coords : coords) {
    if (auto ring = read_ring(ring_coords, feature.id, provenance, diags)) {
      feature.rings.push_back(std::move(*ring));
    }
  }
}

}  // namespace

GeoParseResult parse_geojson(const std::string& text,
                             const std::string& provenance) {
  GeoParseResult result;
  json root = json::parse(text, nullptr, false);
  if (root.is_discarded() || !root.is_object()) {
    result.diagnostics.push_back(make_error(
        "GeoJsonParse", "file is not a JSON object", provenance));
    return result;
  }
  if (root.value("type", "") != "FeatureCollection" ||
      !root.contains("features") || !root["features"].is_array()) {
    result.diagnostics.push_back(make_error(
        "GeoJsonSchema", "expected a FeatureCollection with features",
        provenance));
    return result;
  }

  std::size_t index = 0;
  for (const auto& f : root["features"]) {
    ++index;
    if (!f.is_object() || !f.contains("geometry") ||
        !f["geometry"].is_object()) {
      result.diagnostics.push_back(make_error(
          "GeoJsonSchema",
          "feature " + std::to_string(index) + " has no geometry",
          provenance));
      continue;
    }
    GeoFeature feature;
    feature.id = feature_id(f, index);
    const json& geometry = f["geometry"];
    const std::string type = geometry.value("type", "");
    const json& coords = geometry.contains("coordinates")
                             ? geometry["coordinates"]
                             : json(nullptr);
    if (type == "Polygon") {
      read_polygon(coords, feature, provenance, result.diagnostics);
    } else if (type == "MultiPolygon") {
      if (!coords.is_array()) {
        result.diagnostics.push_back(make_error(
            "GeoJsonSchema",
            "multipolygon of '" + feature.id + "' has malformed coordinates",
            provenance));
        continue;
      }
      for (const auto& polygon : coords) {
        read_polygon(polygon, feature, provenance, result.diagnostics);
      }
    } else {
      result.diagnostics.push_back(make_warning(
          "UnsupportedGeometry",
          "skipping '" + feature.id + "': geometry type '" + type +
              "' is not Polygon or MultiPolygon",
          provenance));
      continue;
    }
    if (!feature.rings.empty()) {
      result.layer.features.push_back(std::move(feature));
    }
  }
  return result;
}

GeoParseResult load_geojson(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    GeoParseResult result;
    result.diagnostics.push_back(
        make_error("MapSourceNotFound", "cannot open GeoJSON file", path));
    return result;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_geojson(buffer.str(), path);
}

void Extent::extend(PlanePoint p) {
  if (empty) {
    umin = umax = p.u;
    vmin = vmax = p.v;
    empty = false;
    return;
  }
  umin = std::min(umin, p.u);
  umax = std::max(umax, p.u);
  vmin = std::min(vmin, p.v);
  vmax = std::max(vmax, p.v);
}

GeoTransform fit_geo_scale(const Extent& extent, const Rect& panel,
                           double padding) {
  if (extent.empty || !(extent.width() > 0.0) || !(extent.height() > 0.0)) {
    throw DomainError("DegenerateExtent",
                      "projected extent has no positive width and height");
  }
  const double usable_w = panel.w * (1.0 - 2.0 * padding);
  const double usable_h = panel.h * (1.0 - 2.0 * padding);
  const double zoom =
      std::min(usable_w / extent.width(), usable_h / extent.height());
  const double u_mid = (extent.umin + extent.umax) / 2.0;
  const double v_mid = (extent.vmin + extent.vmax) / 2.0;
  GeoTransform t;
  t.zoom = zoom;
  t.tx = panel.center_x() - zoom * u_mid;
  t.ty = panel.center_y() + zoom * v_mid;
  return t;
}

Extent projected_extent(const GeoLayer& layer, const Projection& proj) {
  Extent extent;
  for (const auto& feature : layer.features) {
    for (const auto& ring : feature.rings) {
      for (const auto& pt : ring.points) {
        extent.extend(project(proj, pt[0], pt[1]));
      }
    }
  }
  return extent;
}

namespace {

struct RingRef {
  const GeoRing* ring;
  std::size_t feature_index;
};

std::string ring_path(const GeoRing& ring, const Projection& proj,
                      const GeoTransform& transform) {
  std::string d;
  d.reserve(ring.points.size() * 16 + 8);
  // The closing point is carried by Z, not repeated as a line segment.
  const std::size_t n = ring.points.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    const ScreenPoint p =
        transform.apply(project(proj, ring.points[i][0], ring.points[i][1]));
    d += i == 0 ? "M " : " L ";
    d += format_number(p.x);
    d += ' ';
    d += format_number(p.y);
  }
  d += " Z";
  return d;
}

GeoPathResult geo_path_impl(const GeoLayer& layer, const Projection& proj,
                            const GeoTransform& transform, bool parallel) {
  std::vector<RingRef> rings;
  for (std::size_t f = 0; f < layer.features.size(); ++f) {
    for (const auto& ring : layer.features[f].rings) {
      rings.push_back({&ring, f});
    }
  }
  std::vector<std::string> ring_paths(rings.size());
  std::vector<std::string> errors(rings.size());

  const std::int64_t n = static_cast<std::int64_t>(rings.size());
  GLYPHPLOT_PRAGMA_OMP_IF(parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      ring_paths[i] = ring_path(*rings[i].ring, proj, transform);
    } catch (const DomainError& e) {
      errors[i] = e.what();
    }
  }

  GeoPathResult result;
  std::vector<std::string> joined(layer.features.size());
  std::vector<bool> dropped(layer.features.size(), false);
  for (std::size_t i = 0; i < rings.size(); ++i) {
    const std::size_t f = rings[i].feature_index;
    if (!errors[i].empty()) {
      if (!dropped[f]) {
        result.diagnostics.push_back(make_error(
            "AntipodePole", "cannot project '" + layer.features[f].id +
                                "': " + errors[i]));
      }
      dropped[f] = true;
      continue;
    }
    if (!joined[f].empty()) joined[f] += ' ';
    joined[f] += ring_paths[i];
  }
  for (std::size_t f = 0; f < joined.size(); ++f) {
    if (!dropped[f] && !joined[f].empty()) {
      result.paths.push_back(std::move(joined[f]));
    }
  }
  return result;
}

}  // namespace

GeoPathResult geo_path(const GeoLayer& layer, const Projection& proj,
                       const GeoTransform& transform) {
  return geo_path_impl(layer, proj, transform, parallel_enabled());
}

GeoPathResult geo_path_serial(const GeoLayer& layer, const Projection& proj,
                              const GeoTransform& transform) {
  return geo_path_impl(layer, proj, transform, false);
}

}  // namespace glyphplot
