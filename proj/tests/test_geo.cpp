#include "doctest.h"
#include "glyphplot/geojson.hpp"
#include "glyphplot/numeric.hpp"
#include "glyphplot/projection.hpp"
#include "glyphplot/scales.hpp"

#include <cmath>
#include <string>
#include <vector>

using namespace glyphplot;

namespace {

std::string square_feature_collection() {
  return R"({
    "type": "FeatureCollection",
    "features": [
      {
        "type": "Feature",
        "properties": {"id": "Squareland"},
        "geometry": {
          "type": "Polygon",
          "coordinates": [[[0,0],[10,0],[10,10],[0,10],[0,0]]]
        }
      }
    ]
  })";
}

GeoRing make_circle(double lon0, double lat0, double radius_deg, int points) {
  GeoRing ring;
  for (int i = 0; i <= points; ++i) {
    const double t = kTau * i / points;
    ring.points.push_back(
        {lon0 + radius_deg * std::cos(t), lat0 + radius_deg * std::sin(t)});
  }
  ring.points.back() = ring.points.front();
  return ring;
}

}  // namespace

TEST_CASE("parse_projection knows the three projections and one alias") {
  REQUIRE(parse_projection("equirectangular").has_value());
  CHECK(parse_projection("equirectangular")->kind ==
        ProjectionKind::kEquirectangular);
  CHECK(parse_projection("mercator")->kind == ProjectionKind::kMercator);
  CHECK(parse_projection("lambert_azimuthal_equal_area")->kind ==
        ProjectionKind::kLambertAzimuthalEqualArea);
  CHECK(parse_projection("lambert")->kind ==
        ProjectionKind::kLambertAzimuthalEqualArea);
  CHECK(!parse_projection("winkel_tripel").has_value());
  const auto lambert = parse_projection("lambert", {10.0, 52.0});
  CHECK(lambert->center_lon_deg == 10.0);
  CHECK(lambert->center_lat_deg == 52.0);
}

TEST_CASE("equirectangular is the identity on radians") {
  const Projection proj{ProjectionKind::kEquirectangular};
  const PlanePoint p = project(proj, 12.5, 42.8);
  CHECK(p.u == doctest::Approx(0.2181661564992912).epsilon(1e-16));
  CHECK(p.v == doctest::Approx(0.747000919853573).epsilon(1e-16));
  CHECK(project(proj, 180.0, 0.0).u == kPi);
  CHECK(project(proj, -90.0, 0.0).u == -kPi / 2);
  CHECK(project(proj, 0.0, -45.0).v == deg_to_rad(-45.0));
}

TEST_CASE("mercator is exact at the equator and bounded at the clamp") {
  const Projection proj{ProjectionKind::kMercator};
  const PlanePoint equator = project(proj, 0.0, 0.0);
  CHECK(equator.u == 0.0);
  CHECK(equator.v == 0.0);  // exactly zero, not merely close

  const PlanePoint edge = project(proj, 0.0, kMercatorLatClampDeg);
  CHECK(edge.v == doctest::Approx(3.1415929004566103).epsilon(1e-15));
  CHECK(std::abs(edge.v - kPi) < 1e-4);

  // Latitudes beyond the clamp project like the clamp itself.
  CHECK(project(proj, 0.0, 89.0).v == edge.v);
  CHECK(project(proj, 0.0, -89.0).v == -edge.v);

  CHECK(project(proj, 0.0, 51.5).v ==
        doctest::Approx(1.0520656867704066).epsilon(1e-15));
  CHECK(project(proj, 7.25, 51.5).u == deg_to_rad(7.25));
}

TEST_CASE("lambert is zero at its own center and errors at the antipode") {
  const Projection proj{ProjectionKind::kLambertAzimuthalEqualArea, 10.0, 52.0};
  const PlanePoint center = project(proj, 10.0, 52.0);
  CHECK(center.u == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(center.v == doctest::Approx(0.0).epsilon(1e-12));

  const PlanePoint p = project(proj, 20.0, 60.0);
  CHECK(p.u == doctest::Approx(0.08713854169412091).epsilon(1e-15));
  CHECK(p.v == doctest::Approx(0.1456846534892988).epsilon(1e-15));

  CHECK_THROWS_WITH_AS(project(proj, -170.0, -52.0),
                       doctest::Contains("AntipodePole"), DomainError);
}

TEST_CASE("parse_geojson reads polygons with ids from properties") {
  const GeoParseResult result =
      parse_geojson(square_feature_collection(), "map.geojson");
  CHECK(result.diagnostics.empty());
  REQUIRE(result.layer.features.size() == 1);
  const GeoFeature& f = result.layer.features.front();
  CHECK(f.id == "Squareland");
  REQUIRE(f.rings.size() == 1);
  CHECK(f.rings.front().points.size() == 5);
  CHECK(f.rings.front().points.front() == f.rings.front().points.back());
}

TEST_CASE("parse_geojson flattens multipolygons into one feature") {
  const std::string text = R"({
    "type": "FeatureCollection",
    "features": [{
      "type": "Feature",
      "id": 7,
      "geometry": {
        "type": "MultiPolygon",
        "coordinates": [
          [[[0,0],[1,0],[1,1],[0,0]]],
          [[[5,5],[6,5],[6,6],[5,5]]]
        ]
      }
    }]
  })";
  const GeoParseResult result = parse_geojson(text, "map.geojson");
  CHECK(result.diagnostics.empty());
  REQUIRE(result.layer.features.size() == 1);
  CHECK(result.layer.features.front().id == "7");
  CHECK(result.layer.features.front().rings.size() == 2);
}

TEST_CASE("parse_geojson skips unsupported geometry with a warning") {
  const std::string text = R"({
    "type": "FeatureCollection",
    "features": [
      {"type": "Feature", "properties": {"id": "City"},
       "geometry": {"type": "Point", "coordinates": [1, 2]}},
      {"type": "Feature", "properties": {"id": "Land"},
       "geometry": {"type": "Polygon",
                    "coordinates": [[[0,0],[1,0],[1,1],[0,0]]]}}
    ]
  })";
  const GeoParseResult result = parse_geojson(text, "map.geojson");
  REQUIRE(result.diagnostics.size() == 1);
  const Diagnostic& d = result.diagnostics.front();
  CHECK(d.severity == Severity::kWarning);
  CHECK(d.code == "UnsupportedGeometry");
  CHECK(d.message.find("City") != std::string::npos);
  CHECK(d.message.find("Point") != std::string::npos);
  REQUIRE(result.layer.features.size() == 1);
  CHECK(result.layer.features.front().id == "Land");
}

TEST_CASE("parse_geojson reports unclosed and short rings by feature") {
  const std::string unclosed = R"({
    "type": "FeatureCollection",
    "features": [{
      "type": "Feature", "properties": {"id": "Brokenland"},
      "geometry": {"type": "Polygon",
                   "coordinates": [[[0,0],[1,0],[1,1],[0,1]]]}
    }]
  })";
  const GeoParseResult r1 = parse_geojson(unclosed, "map.geojson");
  REQUIRE(has_code(r1.diagnostics, "UnclosedRing"));
  CHECK(r1.diagnostics.front().message.find("Brokenland") !=
        std::string::npos);
  CHECK(r1.layer.features.empty());

  const std::string tiny = R"({
    "type": "FeatureCollection",
    "features": [{
      "type": "Feature",
      "geometry": {"type": "Polygon", "coordinates": [[[0,0],[1,0],[0,0]]]}
    }]
  })";
  CHECK(has_code(parse_geojson(tiny, "map.geojson").diagnostics,
                 "TooFewRingPoints"));
}

TEST_CASE("parse_geojson distinguishes bad JSON from a bad schema") {
  CHECK(has_code(parse_geojson("not json at all", "m.geojson").diagnostics,
                 "GeoJsonParse"));
  CHECK(has_code(parse_geojson(R"({"type": "Topology"})", "m.geojson")
                     .diagnostics,
                 "GeoJsonSchema"));
}

TEST_CASE("load_geojson reports a missing file") {
  const GeoParseResult result = load_geojson("/nonexistent/missing.geojson");
  CHECK(has_code(result.diagnostics, "MapSourceNotFound"));
}

TEST_CASE("extent accumulates the bounding box of its points") {
  Extent e;
  CHECK(e.empty);
  e.extend({2.0, -1.0});
  CHECK(!e.empty);
  CHECK(e.umin == 2.0);
  CHECK(e.umax == 2.0);
  e.extend({-3.0, 4.0});
  CHECK(e.umin == -3.0);
  CHECK(e.umax == 2.0);
  CHECK(e.vmin == -1.0);
  CHECK(e.vmax == 4.0);
  CHECK(e.width() == 5.0);
  CHECK(e.height() == 5.0);
}

TEST_CASE("fit_geo_scale centers the extent with uniform zoom") {
  Extent extent;
  extent.extend({0.0, 0.0});
  extent.extend({1.0, 1.0});
  const GeoTransform t = fit_geo_scale(extent, Rect{0.0, 0.0, 100.0, 100.0});
  CHECK(t.zoom == 96.0);  // 2% padding each side of a 100-unit panel
  const ScreenPoint lo = t.apply({0.0, 0.0});
  const ScreenPoint hi = t.apply({1.0, 1.0});
  CHECK(lo.x == 2.0);
  CHECK(lo.y == 98.0);
  CHECK(hi.x == 98.0);
  CHECK(hi.y == 2.0);  // north maps up
}

TEST_CASE("fit_geo_scale letterboxes a wide extent") {
  Extent extent;
  extent.extend({0.0, 0.0});
  extent.extend({2.0, 1.0});
  const GeoTransform t =
      fit_geo_scale(extent, Rect{0.0, 0.0, 100.0, 100.0}, 0.0);
  CHECK(t.zoom == 50.0);
  const ScreenPoint lo = t.apply({0.0, 0.0});
  const ScreenPoint hi = t.apply({2.0, 1.0});
  CHECK(lo.x == 0.0);
  CHECK(hi.x == 100.0);
  CHECK(lo.y == 75.0);  // v-span centered vertically
  CHECK(hi.y == 25.0);
}

TEST_CASE("fit_geo_scale rejects empty and flat extents") {
  Extent empty;
  CHECK_THROWS_WITH_AS(fit_geo_scale(empty, Rect{0.0, 0.0, 100.0, 100.0}),
                       doctest::Contains("DegenerateExtent"), DomainError);
  Extent flat;
  flat.extend({1.0, 1.0});
  CHECK_THROWS_WITH_AS(fit_geo_scale(flat, Rect{0.0, 0.0, 100.0, 100.0}),
                       doctest::Contains("DegenerateExtent"), DomainError);
}

TEST_CASE("projected_extent spans every ring point") {
  const GeoParseResult parsed =
      parse_geojson(square_feature_collection(), "map.geojson");
  const Projection proj{ProjectionKind::kEquirectangular};
  const Extent extent = projected_extent(parsed.layer, proj);
  CHECK(extent.umin == 0.0);
  CHECK(extent.vmin == 0.0);
  CHECK(extent.umax == deg_to_rad(10.0));
  CHECK(extent.vmax == deg_to_rad(10.0));
}

TEST_CASE("geo_path emits one closed subpath per ring") {
  const GeoParseResult parsed =
      parse_geojson(square_feature_collection(), "map.geojson");
  const Projection proj{ProjectionKind::kEquirectangular};
  const GeoTransform identity{1.0, 0.0, 0.0};
  const GeoPathResult result =
      geo_path_serial(parsed.layer, proj, identity);
  CHECK(result.diagnostics.empty());
  REQUIRE(result.paths.size() == 1);
  // Four segments; the closing point rides on Z rather than a repeated L.
  CHECK(result.paths.front() ==
        "M 0 0 L 0.1745 0 L 0.1745 -0.1745 L 0 -0.1745 Z");
}

TEST_CASE("a feature's rings join into one evenodd-ready path") {
  const std::string text = R"({
    "type": "FeatureCollection",
    "features": [{
      "type": "Feature", "properties": {"id": "Donut"},
      "geometry": {"type": "Polygon", "coordinates": [
        [[0,0],[30,0],[30,30],[0,30],[0,0]],
        [[10,10],[20,10],[20,20],[10,20],[10,10]]
      ]}
    }]
  })";
  const GeoParseResult parsed = parse_geojson(text, "map.geojson");
  REQUIRE(parsed.layer.features.size() == 1);
  const GeoPathResult result =
      geo_path_serial(parsed.layer, Projection{ProjectionKind::kEquirectangular},
                      GeoTransform{100.0, 0.0, 0.0});
  REQUIRE(result.paths.size() == 1);
  const std::string& d = result.paths.front();
  CHECK(d.find("Z M ") != std::string::npos);  // two subpaths, one path
  std::size_t m_count = 0;
  for (std::size_t pos = 0; (pos = d.find("M ", pos)) != std::string::npos;
       pos += 2) {
    ++m_count;
  }
  CHECK(m_count == 2);
}

TEST_CASE("a feature with an unprojectable ring is dropped whole") {
  GeoLayer layer;
  layer.features.push_back(GeoFeature{"Nearby", {make_circle(12, 50, 2, 16)}});
  layer.features.push_back(
      GeoFeature{"Antipodia",
                 {make_circle(12, 50, 2, 16),
                  GeoRing{{{-170, -52}, {-169, -52}, {-169, -51}, {-170, -52}}}}});
  const Projection proj{ProjectionKind::kLambertAzimuthalEqualArea, 10.0, 52.0};
  const GeoPathResult result =
      geo_path_serial(layer, proj, GeoTransform{100.0, 300.0, 200.0});
  REQUIRE(result.paths.size() == 1);
  REQUIRE(result.diagnostics.size() == 1);
  CHECK(result.diagnostics.front().code == "AntipodePole");
  CHECK(result.diagnostics.front().message.find("Antipodia") !=
        std::string::npos);
}

TEST_CASE("parallel and serial geo paths agree byte for byte") {
  GeoLayer layer;
  SplitMix64 rng{11};
  for (int f = 0; f < 40; ++f) {
    const double lon = -30.0 + 60.0 * rng.next_uniform();
    const double lat = -50.0 + 100.0 * rng.next_uniform();
    layer.features.push_back(GeoFeature{
        "f" + std::to_string(f), {make_circle(lon, lat, 3.0, 64)}});
  }
  const Projection proj{ProjectionKind::kMercator};
  const GeoTransform t{3.0, 300.0, 225.0};
  const GeoPathResult serial = geo_path_serial(layer, proj, t);
  const GeoPathResult parallel = geo_path(layer, proj, t);
  CHECK(serial.diagnostics.empty());
  CHECK(parallel.diagnostics.empty());
  REQUIRE(serial.paths.size() == parallel.paths.size());
  for (std::size_t i = 0; i < serial.paths.size(); ++i) {
    CHECK(serial.paths[i] == parallel.paths[i]);
  }
}
