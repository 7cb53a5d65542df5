#include "glyphplot/projection.hpp"

#include <cmath>

#include "glyphplot/diagnostics.hpp"
#include "glyphplot/numeric.hpp"

namespace glyphplot {

std::optional<Projection> parse_projection(std::string_view name,
                                           std::array<double, 2> center) {
  Projection proj;
  proj.center_lon_deg = center[0];
  proj.center_lat_deg = center[1];
  if (name == "equirectangular") {
    proj.kind = ProjectionKind::kEquirectangular;
  } else if (name == "mercator") {
    proj.kind = ProjectionKind::kMercator;
  } else if (name == "lambert_azimuthal_equal_area" || name == "lambert") {
    proj.kind = ProjectionKind::kLambertAzimuthalEqualArea;
  } else {
    return std::nullopt;
  }
  return proj;
}

const char* projection_name(ProjectionKind kind) {
  switch (kind) {
    case ProjectionKind::kEquirectangular: return "equirectangular";
    case ProjectionKind::kMercator: return "mercator";
    case ProjectionKind::kLambertAzimuthalEqualArea:
      return "lambert_azimuthal_equal_area";
  }
  return "unknown";
}

PlanePoint project(const Projection& proj, double lon_deg, double lat_deg) {
  switch (proj.kind) {
    case ProjectionKind::kEquirectangular:
      return {deg_to_rad(lon_deg), deg_to_rad(lat_deg)};

    case ProjectionKind::kMercator: {
      double lat = lat_deg;
      if (lat > kMercatorLatClampDeg) lat = kMercatorLatClampDeg;
      if (lat < -kMercatorLatClampDeg) lat = -kMercatorLatClampDeg;
      const double phi = deg_to_rad(lat);
      // asinh(tan phi) == ln tan(pi/4 + phi/2), exact at the equator.
      return {deg_to_rad(lon_deg), std::asinh(std::tan(phi))};
    }

    case ProjectionKind::kLambertAzimuthalEqualArea: {
      const double lam0 = deg_to_rad(proj.center_lon_deg);
      const double phi0 = deg_to_rad(proj.center_lat_deg);
      const double lam = deg_to_rad(lon_deg);
      const double phi = deg_to_rad(lat_deg);
      const double sin_phi0 = std::sin(phi0), cos_phi0 = std::cos(phi0);
      const double sin_phi = std::sin(phi), cos_phi = std::cos(phi);
      const double cos_dlam = std::cos(lam - lam0);
      const double denom =
          1.0 + sin_phi0 * sin_phi + cos_phi0 * cos_phi * cos_dlam;
      if (std::fabs(denom) < 1e-12) {
        throw DomainError("AntipodePole",
                          "point is antipodal to the projection center");
      }
      const double k = std::sqrt(2.0 / denom);
      return {k * cos_phi * std::sin(lam - lam0),
              k * (cos_phi0 * sin_phi - sin_phi0 * cos_phi * cos_dlam)};
    }
  }
  return {};
}

}  // namespace glyphplot
