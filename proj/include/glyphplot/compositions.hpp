#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "glyphplot/diagnostics.hpp"
#include "glyphplot/plot_spec.hpp"
#include "glyphplot/table.hpp"

namespace glyphplot {

// One plottable observation: a data-space anchor plus the raw slice values
// in global category order. No normalization happens at this layer.
struct CompositionRow {
  double anchor_x = 0.0;
  double anchor_y = 0.0;
  std::vector<double> values;
  std::optional<double> size_value;
  std::optional<std::string> facet_key;
  long row_id = -1;  // 1-based source data row (first of group for long data)
};

struct Compositions {
  std::vector<std::string> categories;  // global slice-category order
  std::vector<CompositionRow> rows;
  std::vector<Diagnostic> diagnostics;
};

// Column-level checks: missing columns, non-numeric slice columns, map
// without projection, unknown projection, role conflicts. Empty report
// means the spec is renderable against this table.
std::vector<Diagnostic> validate_spec(const PlotSpec& spec,
                                      const DataTable& table);

// Row-level extraction. Negative, non-numeric, and all-zero slice rows are
// always errors; rows with missing values are errors unless
// spec.skip_incomplete_rows, which downgrades them to skipped-with-warning.
Compositions extract_compositions(const PlotSpec& spec, const DataTable& table);

struct PivotResult {
  DataTable table;
  std::vector<Diagnostic> diagnostics;
};

// One output row per distinct group key (first-appearance order); one column
// per category value (first-appearance order); duplicate (group, category)
// pairs are summed; absent pairs fill with 0.
PivotResult pivot_long_to_wide(const DataTable& table,
                               const std::string& category_col,
                               const std::string& value_col,
                               const std::vector<std::string>& group_cols);

}  // namespace glyphplot
