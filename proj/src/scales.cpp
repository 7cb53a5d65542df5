#include "glyphplot/scales.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "glyphplot/diagnostics.hpp"

namespace glyphplot {

LinearScale fit_scale(std::span<const double> values, double range_lo,
                      double range_hi, double expansion) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : values) {
    if (!std::isfinite(v)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (lo > hi) {
    throw DomainError("NoFiniteValues", "cannot fit a scale to no data");
  }
  if (lo == hi) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = expansion * (hi - lo);
  return LinearScale{lo - pad, hi + pad, range_lo, range_hi};
}

std::vector<double> nice_breaks(double dmin, double dmax, int target_count) {
  if (!(dmin < dmax) || target_count < 2) return {};
  const double raw = (dmax - dmin) / (target_count - 1);
  const double base = std::pow(10.0, std::floor(std::log10(raw)));
  double step = 10.0 * base;
  for (double mult : {1.0, 2.0, 2.5, 5.0}) {
    const double candidate = mult * base;
    if (candidate >= raw * (1.0 - 1e-9)) {
      step = candidate;
      break;
    }
  }
  const double eps = 1e-9;
  const long long k_lo = static_cast<long long>(std::ceil(dmin / step - eps));
  const long long k_hi = static_cast<long long>(std::floor(dmax / step + eps));
  std::vector<double> breaks;
  for (long long k = k_lo; k <= k_hi; ++k) {
    breaks.push_back(static_cast<double>(k) * step);
  }
  return breaks;
}

SizeScale fit_size_scale(std::span<const double> values, double r_min,
                         double r_max) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : values) {
    if (!std::isfinite(v)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (lo > hi) {
    throw DomainError("NoFiniteValues", "cannot fit a size scale to no data");
  }
  if (lo == hi) {
    lo -= 1.0;
    hi += 1.0;
  }
  return SizeScale{lo, hi, r_min, r_max};
}

double size_radius(const SizeScale& scale, double v) {
  const double clamped = std::clamp(v, scale.vmin, scale.vmax);
  const double t = (clamped - scale.vmin) / (scale.vmax - scale.vmin);
  const double r2 = scale.r_min * scale.r_min +
                    (scale.r_max * scale.r_max - scale.r_min * scale.r_min) * t;
  return std::sqrt(r2);
}

std::vector<Panel> facet_layout(const std::vector<std::string>& keys,
                                Rect total, std::optional<int> rows,
                                std::optional<int> cols, double gap) {
  const int n = static_cast<int>(keys.size());
  if (n < 1) {
    throw DomainError("NoPanels", "facet layout needs at least one key");
  }
  int n_cols, n_rows;
  if (cols) {
    n_cols = *cols;
    n_rows = rows ? *rows : (n + n_cols - 1) / n_cols;
  } else if (rows) {
    n_rows = *rows;
    n_cols = (n + n_rows - 1) / n_rows;
  } else {
    n_cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    n_rows = (n + n_cols - 1) / n_cols;
  }
  if (n_rows * n_cols < n) {
    throw DomainError("RowsColsTooSmall",
                      "grid " + std::to_string(n_rows) + "x" +
                          std::to_string(n_cols) + " cannot hold " +
                          std::to_string(n) + " panels");
  }
  const double cell_w = (total.w - gap * (n_cols - 1)) / n_cols;
  const double cell_h = (total.h - gap * (n_rows - 1)) / n_rows;

  std::vector<Panel> panels;
  panels.reserve(keys.size());
  for (int i = 0; i < n; ++i) {
    const int row = i / n_cols;
    const int col = i % n_cols;
    Panel panel;
    panel.rect = Rect{total.x + col * (cell_w + gap),
                      total.y + row * (cell_h + gap), cell_w, cell_h};
    panel.facet_key = keys[i];
    panels.push_back(std::move(panel));
  }
  return panels;
}

std::vector<JitterOffset> jitter_offsets(std::size_t n, double amount,
                                         std::uint64_t seed) {
  if (amount < 0) {
    throw DomainError("NegativeJitter", "jitter amount must be >= 0");
  }
  SplitMix64 rng{seed};
  std::vector<JitterOffset> offsets;
  offsets.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double ux = rng.next_uniform();
    const double uy = rng.next_uniform();
    offsets.push_back({(2.0 * ux - 1.0) * amount, (2.0 * uy - 1.0) * amount});
  }
  return offsets;
}

}  // namespace glyphplot
