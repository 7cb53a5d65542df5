#pragma once

#include <array>
#include <string>
#include <vector>

#include "glyphplot/diagnostics.hpp"
#include "glyphplot/geometry.hpp"
#include "glyphplot/projection.hpp"

namespace glyphplot {

// Closed boundary ring: >= 4 (lon, lat) degree pairs, first == last.
struct GeoRing {
  std::vector<std::array<double, 2>> points;
};

struct GeoFeature {
  std::string id;
  std::vector<GeoRing> rings;
};

struct GeoLayer {
  std::vector<GeoFeature> features;
  std::string fill = "#ede9dd";
  std::string stroke = "#9a9a9a";
};

struct GeoParseResult {
  GeoLayer layer;
  std::vector<Diagnostic> diagnostics;
};

// RFC 7946 subset: FeatureCollection of Polygon / MultiPolygon features;
// other geometry types are skipped with a warning. Unclosed or short rings
// are errors naming the feature. `properties.id`, then the feature `id`,
// names a feature.
GeoParseResult parse_geojson(const std::string& text,
                             const std::string& provenance);
GeoParseResult load_geojson(const std::string& path);

struct Extent {
  double umin = 0.0;
  double vmin = 0.0;
  double umax = 0.0;
  double vmax = 0.0;
  bool empty = true;

  void extend(PlanePoint p);
  double width() const { return umax - umin; }
  double height() const { return vmax - vmin; }
};

// Uniform zoom plus translation; one scalar for both axes so projected
// shapes keep their aspect. v is negated here, mapping north up in y-down
// screen space.
struct GeoTransform {
  double zoom = 1.0;
  double tx = 0.0;
  double ty = 0.0;

  ScreenPoint apply(PlanePoint p) const {
    return {tx + zoom * p.u, ty - zoom * p.v};
  }
};

// Fits `extent` into `panel` with `padding` (fraction of the panel) on each
// side, centered. Throws DomainError("DegenerateExtent") when the extent has
// no positive width or height.
GeoTransform fit_geo_scale(const Extent& extent, const Rect& panel,
                           double padding = 0.02);

// Projects the extent of every ring point.
Extent projected_extent(const GeoLayer& layer, const Projection& proj);

struct GeoPathResult {
  // One string per feature; a feature's rings become subpaths of one path
  // ("M ... Z M ... Z") so interior rings cut holes under evenodd filling.
  std::vector<std::string> paths;
  std::vector<Diagnostic> diagnostics;
};

// Projects each ring point-by-point, applies the transform, and emits
// M/L...Z path data. Rings are independent; built in parallel, then joined
// per feature. A feature with an unprojectable ring is dropped whole, with
// a diagnostic.
GeoPathResult geo_path(const GeoLayer& layer, const Projection& proj,
                       const GeoTransform& transform);
// Serial reference for the parallel version; kept for tests and benchmarks.
GeoPathResult geo_path_serial(const GeoLayer& layer, const Projection& proj,
                              const GeoTransform& transform);

}  // namespace glyphplot
