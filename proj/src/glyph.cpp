#include "glyphplot/glyph.hpp"

#include <cmath>

#include "glyphplot/diagnostics.hpp"
#include "glyphplot/numeric.hpp"

namespace glyphplot {

std::vector<double> normalize_slices(std::span<const double> values) {
  double total = 0.0;
  for (double v : values) {
    if (v < 0.0) {
      throw DomainError("NegativeSliceValue",
                        "slice values must be non-negative, got " +
                            std::to_string(v));
    }
    total += v;
  }
  if (!(total > 0.0)) {
    throw DomainError("AllZeroComposition",
                      "at least one slice value must be positive");
  }
  std::vector<double> proportions;
  proportions.reserve(values.size());
  for (double v : values) proportions.push_back(v / total);
  return proportions;
}

std::vector<AngleSpan> sector_angles(std::span<const double> proportions) {
  double sum = 0.0;
  for (double p : proportions) sum += p;
  if (std::fabs(sum - 1.0) > 1e-9) {
    throw DomainError("UnnormalizedProportions",
                      "proportions must sum to 1 within 1e-9");
  }
  std::vector<AngleSpan> spans;
  double cumulative = 0.0;
  for (std::size_t i = 0; i < proportions.size(); ++i) {
    if (proportions[i] <= 0.0) continue;
    const double start = cumulative * kTau;
    cumulative += proportions[i];
    spans.push_back({i, start, cumulative * kTau});
  }
  if (!spans.empty()) spans.back().end = kTau;
  return spans;
}

ScreenPoint angle_to_point(ScreenPoint center, double radius, double theta) {
  return {center.x + radius * std::sin(theta),
          center.y - radius * std::cos(theta)};
}

std::string sector_path(ScreenPoint center, double radius,
                        const Sector& sector) {
  const double span = sector.end_angle - sector.start_angle;
  if (span >= kTau) {
    throw DomainError("FullCircleSector",
                      "full-circle sector; render it with full_circle");
  }
  const ScreenPoint start =
      angle_to_point(center, radius, sector.start_angle);
  const ScreenPoint end = angle_to_point(center, radius, sector.end_angle);
  const char* large_arc = span > kPi ? "1" : "0";
  // sweep flag 1: positive-angle direction is clockwise in y-down space.
  std::string d;
  d.reserve(96);
  d += "M ";
  d += format_number(center.x);
  d += ' ';
  d += format_number(center.y);
  d += " L ";
  d += format_number(start.x);
  d += ' ';
  d += format_number(start.y);
  d += " A ";
  d += format_number(radius);
  d += ' ';
  d += format_number(radius);
  d += " 0 ";
  d += large_arc;
  d += " 1 ";
  d += format_number(end.x);
  d += ' ';
  d += format_number(end.y);
  d += " Z";
  return d;
}

CircleElement full_circle(ScreenPoint center, double radius,
                          std::string fill) {
  return CircleElement{center, radius, std::move(fill)};
}

GlyphGeometry build_glyph(const CompositionRow& row, ScreenPoint center,
                          double radius, const Palette& palette,
                          std::optional<std::string> tooltip) {
  const std::vector<double> proportions = normalize_slices(row.values);
  const std::vector<AngleSpan> spans = sector_angles(proportions);

  GlyphGeometry glyph;
  glyph.center = center;
  glyph.radius = radius;
  glyph.row_id = row.row_id;
  glyph.tooltip = std::move(tooltip);
  glyph.sectors.reserve(spans.size());
  for (const AngleSpan& span : spans) {
    Sector sector;
    sector.start_angle = span.start;
    sector.end_angle = span.end;
    sector.category = palette[span.index].first;
    sector.fill = palette[span.index].second;
    sector.raw_value = row.values[span.index];
    sector.proportion = proportions[span.index];
    glyph.sectors.push_back(std::move(sector));
  }
  return glyph;
}

}  // namespace glyphplot
