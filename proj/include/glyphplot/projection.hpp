#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "glyphplot/geometry.hpp"

namespace glyphplot {

enum class ProjectionKind {
  kEquirectangular,
  kMercator,
  kLambertAzimuthalEqualArea,
};

// Web-map convention; bounds the mercator plane.
inline constexpr double kMercatorLatClampDeg = 85.05113;

struct Projection {
  ProjectionKind kind = ProjectionKind::kEquirectangular;
  double center_lon_deg = 0.0;  // lambert only
  double center_lat_deg = 0.0;
};

// Accepts "equirectangular", "mercator",
// "lambert_azimuthal_equal_area" (alias "lambert").
std::optional<Projection> parse_projection(std::string_view name,
                                           std::array<double, 2> center = {0, 0});

const char* projection_name(ProjectionKind kind);

// (lon, lat) degrees to projection-plane coordinates, v increasing north.
// Equirectangular is the identity on radians; mercator clamps latitude to
// +-85.05113 degrees before projecting. Throws DomainError("AntipodePole")
// when the lambert denominator vanishes.
PlanePoint project(const Projection& proj, double lon_deg, double lat_deg);

}  // namespace glyphplot
