#pragma once

namespace glyphplot {

// Coordinates in output user units, y increasing downward.
struct ScreenPoint {
  double x = 0.0;
  double y = 0.0;
};

struct Rect {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double right() const { return x + w; }
  double bottom() const { return y + h; }
  double center_x() const { return x + w / 2.0; }
  double center_y() const { return y + h / 2.0; }
};

// Projection-plane coordinates, v increasing northward (flipped to screen
// space by the geo transform).
struct PlanePoint {
  double u = 0.0;
  double v = 0.0;
};

}  // namespace glyphplot
