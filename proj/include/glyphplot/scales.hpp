#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glyphplot/geometry.hpp"

namespace glyphplot {

// Affine data-to-screen map. The stored domain is already expanded, so the
// domain endpoints land exactly on the range endpoints. An inverted range
// (lo > hi) flips the axis; y scales use that so larger values sit higher.
struct LinearScale {
  double domain_min = 0.0;
  double domain_max = 1.0;
  double range_lo = 0.0;
  double range_hi = 1.0;

  double forward(double x) const {
    return range_lo + (x - domain_min) / (domain_max - domain_min) *
                          (range_hi - range_lo);
  }
  double inverse(double s) const {
    return domain_min + (s - range_lo) / (range_hi - range_lo) *
                            (domain_max - domain_min);
  }
};

// Domain = (min, max) of the finite values, expanded by `expansion` x span
// on each side; a degenerate domain (min == max == c) widens to (c-1, c+1)
// first. Throws DomainError("NoFiniteValues") when nothing is finite.
LinearScale fit_scale(std::span<const double> values, double range_lo,
                      double range_hi, double expansion = 0.05);

// step = smallest of {1, 2, 2.5, 5, 10} x 10^floor(log10(raw)) >= raw with
// raw = (dmax - dmin) / (target_count - 1); returns the multiples of step
// inside [dmin, dmax].
std::vector<double> nice_breaks(double dmin, double dmax,
                                int target_count = 5);

// Glyph area grows linearly in value; radii default to (4, 18).
struct SizeScale {
  double vmin = 0.0;
  double vmax = 1.0;
  double r_min = 4.0;
  double r_max = 18.0;
};

SizeScale fit_size_scale(std::span<const double> values, double r_min = 4.0,
                         double r_max = 18.0);

// r = sqrt(r_min^2 + (r_max^2 - r_min^2) (v - vmin) / (vmax - vmin));
// values outside the domain clamp rather than error.
double size_radius(const SizeScale& scale, double v);

struct Panel {
  Rect rect;
  LinearScale x_scale;
  LinearScale y_scale;
  std::optional<std::string> facet_key;
};

// Row-major grid of panels inside `total`, separated by `gap`. Defaults:
// cols = ceil(sqrt(n)), rows = ceil(n / cols). All panels are expected to
// share global scales; the caller attaches them. Throws
// DomainError("RowsColsTooSmall") when rows x cols < n.
std::vector<Panel> facet_layout(const std::vector<std::string>& keys,
                                Rect total,
                                std::optional<int> rows = std::nullopt,
                                std::optional<int> cols = std::nullopt,
                                double gap = 10.0);

// Deterministic generator for jitter streams.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next_u64() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // In [0, 1): the 64-bit output over 2^64.
  double next_uniform() { return static_cast<double>(next_u64()) * 0x1.0p-64; }
};

struct JitterOffset {
  double dx = 0.0;
  double dy = 0.0;
};

// 2n deviates from one SplitMix64 stream, mapped to (2u - 1) x amount.
// Fully determined by the seed; applied in screen units after transforms.
std::vector<JitterOffset> jitter_offsets(std::size_t n, double amount,
                                         std::uint64_t seed);

}  // namespace glyphplot
