#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "glyphplot/compositions.hpp"
#include "glyphplot/geometry.hpp"

namespace glyphplot {

// (category, fill color) in global category order.
using Palette = std::vector<std::pair<std::string, std::string>>;

// One pie slice. Angles are radians in [0, 2pi], clockwise from 12 o'clock.
struct Sector {
  double start_angle = 0.0;
  double end_angle = 0.0;
  std::string category;
  double raw_value = 0.0;
  double proportion = 0.0;  // in (0, 1]
  std::string fill;
};

// One glyph in screen space. The radius and sectors depend only on the
// composition, radius, and palette; axis ranges, panel sizes, and
// projections can only move `center`.
struct GlyphGeometry {
  ScreenPoint center;
  double radius = 0.0;
  std::vector<Sector> sectors;  // nonzero categories, category order
  std::optional<std::string> tooltip;
  long row_id = -1;
};

// proportions[i] = values[i] / sum(values). Zero entries stay as 0 (they are
// retained for legends and tooltips but draw no sector). Throws
// DomainError("NegativeSliceValue") / DomainError("AllZeroComposition").
std::vector<double> normalize_slices(std::span<const double> values);

struct AngleSpan {
  std::size_t index;  // position in the input proportion list
  double start = 0.0;
  double end = 0.0;
};

// Cumulative partition of [0, 2pi] in input order; zero proportions produce
// no span; the final end is forced to exactly 2pi.
std::vector<AngleSpan> sector_angles(std::span<const double> proportions);

// 12 o'clock at theta = 0, clockwise increase, y-down screen space:
// (cx + r sin theta, cy - r cos theta).
ScreenPoint angle_to_point(ScreenPoint center, double radius, double theta);

// "M cx cy L x0 y0 A r r 0 large 1 x1 y1 Z"; large-arc iff the span exceeds
// pi. Numbers use format_number. Throws DomainError("FullCircleSector") for
// a full-circle span; use full_circle for those.
std::string sector_path(ScreenPoint center, double radius,
                        const Sector& sector);

struct CircleElement {
  ScreenPoint center;
  double radius = 0.0;
  std::string fill;
};

// A single-category composition degenerates to a plain disc.
CircleElement full_circle(ScreenPoint center, double radius, std::string fill);

// Assembles sectors in category order with palette colors. `palette` must
// cover every category, aligned with row.values. The tooltip is attached
// verbatim when provided.
GlyphGeometry build_glyph(const CompositionRow& row, ScreenPoint center,
                          double radius, const Palette& palette,
                          std::optional<std::string> tooltip = std::nullopt);

}  // namespace glyphplot
