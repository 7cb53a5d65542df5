#include "glyphplot/compositions.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "glyphplot/numeric.hpp"
#include "glyphplot/projection.hpp"

namespace glyphplot {

namespace {

void check_column_exists(const DataTable& table, const std::string& name,
                         std::vector<Diagnostic>& diags) {
  if (!table.column_index(name)) {
    diags.push_back(make_error("MissingColumn",
                               "column '" + name + "' not found in data",
                               table.provenance(), -1, name));
  }
}

// Flags a column whose non-missing cells are not all numeric, anchored at
// the first offending row.
void check_column_numeric(const DataTable& table, const std::string& name,
                          std::vector<Diagnostic>& diags) {
  auto col = table.column_index(name);
  if (!col) return;
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    const Cell& cell = table.cell(r, *col);
    if (!cell.missing && !cell.number) {
      diags.push_back(make_error(
          "NonNumeric",
          "column '" + name + "' contains non-numeric value '" + cell.text + "'",
          table.provenance(), table.source_row(r), name));
      return;
    }
  }
}

// Columns whose cells must parse as numbers for this spec.
std::vector<std::string> numeric_columns(const PlotSpec& spec) {
  std::vector<std::string> cols{spec.x_column, spec.y_column};
  if (const auto* wide = std::get_if<WideSlices>(&spec.slices)) {
    cols.insert(cols.end(), wide->columns.begin(), wide->columns.end());
  } else {
    cols.push_back(std::get<LongSlices>(spec.slices).value_column);
  }
  if (spec.size_column) cols.push_back(*spec.size_column);
  return cols;
}

std::vector<std::string> referenced_columns(const PlotSpec& spec) {
  std::vector<std::string> cols{spec.x_column, spec.y_column};
  if (const auto* wide = std::get_if<WideSlices>(&spec.slices)) {
    cols.insert(cols.end(), wide->columns.begin(), wide->columns.end());
  } else {
    const auto& lng = std::get<LongSlices>(spec.slices);
    cols.push_back(lng.category_column);
    cols.push_back(lng.value_column);
    cols.insert(cols.end(), lng.group_columns.begin(),
                lng.group_columns.end());
  }
  if (spec.size_column) cols.push_back(*spec.size_column);
  if (spec.facet_column) cols.push_back(*spec.facet_column);
  return cols;
}

// group_by plus any of x/y/size/facet not already listed, original order.
std::vector<std::string> effective_group_columns(const PlotSpec& spec,
                                                 const LongSlices& lng) {
  std::vector<std::string> cols = lng.group_columns;
  auto add = [&cols](const std::string& name) {
    if (std::find(cols.begin(), cols.end(), name) == cols.end()) {
      cols.push_back(name);
    }
  };
  add(spec.x_column);
  add(spec.y_column);
  if (spec.size_column) add(*spec.size_column);
  if (spec.facet_column) add(*spec.facet_column);
  return cols;
}

class RowExtractor {
 public:
  RowExtractor(const PlotSpec& spec, const DataTable& table,
               Compositions& out)
      : spec_(spec), table_(table), out_(out),
        map_mode_(spec.projection.has_value() || spec.map_source.has_value()) {}

  void extract_wide(const std::vector<std::string>& slice_columns) {
    out_.categories = slice_columns;
    std::vector<std::size_t> slice_idx;
    for (const auto& name : slice_columns) {
      slice_idx.push_back(*table_.column_index(name));
    }
    const auto x_idx = *table_.column_index(spec_.x_column);
    const auto y_idx = *table_.column_index(spec_.y_column);
    std::optional<std::size_t> size_idx, facet_idx;
    if (spec_.size_column) size_idx = table_.column_index(*spec_.size_column);
    if (spec_.facet_column) facet_idx = table_.column_index(*spec_.facet_column);

    for (std::size_t r = 0; r < table_.row_count(); ++r) {
      const long row = table_.source_row(r);
      bool ok = true;

      CompositionRow comp;
      comp.row_id = row;
      ok &= read_anchor(r, row, x_idx, y_idx, comp);

      comp.values.reserve(slice_idx.size());
      double total = 0.0;
      for (std::size_t i = 0; i < slice_idx.size(); ++i) {
        const Cell& cell = table_.cell(r, slice_idx[i]);
        if (cell.missing) {
          report_missing(row, out_.categories[i]);
          ok = false;
          comp.values.push_back(0.0);
          continue;
        }
        if (!cell.number) {
          error("NonNumeric", row, out_.categories[i],
                "non-numeric slice value '" + cell.text + "' in column '" +
                    out_.categories[i] + "'");
          ok = false;
          comp.values.push_back(0.0);
          continue;
        }
        if (*cell.number < 0) {
          error("NegativeSliceValue", row, out_.categories[i],
                "negative slice value " + format_number(*cell.number) +
                    " in column '" + out_.categories[i] + "'");
          ok = false;
        }
        comp.values.push_back(*cell.number);
        total += *cell.number;
      }
      if (ok && total <= 0.0) {
        error("AllZeroComposition", row, "",
              "all slice values are zero; nothing to draw");
        ok = false;
      }
      ok &= read_size(r, row, size_idx, comp);
      ok &= read_facet(r, row, facet_idx, comp);
      if (ok) out_.rows.push_back(std::move(comp));
    }
  }

  bool read_anchor(std::size_t r, long row, std::size_t x_idx,
                   std::size_t y_idx, CompositionRow& comp) {
    bool ok = true;
    ok &= read_coord(r, row, x_idx, spec_.x_column, comp.anchor_x);
    ok &= read_coord(r, row, y_idx, spec_.y_column, comp.anchor_y);
    if (ok && map_mode_) {
      if (comp.anchor_x < -180.0 || comp.anchor_x > 180.0) {
        error("LonLatOutOfRange", row, spec_.x_column,
              "longitude " + format_number(comp.anchor_x) +
                  " outside [-180, 180]");
        ok = false;
      }
      if (comp.anchor_y < -90.0 || comp.anchor_y > 90.0) {
        error("LonLatOutOfRange", row, spec_.y_column,
              "latitude " + format_number(comp.anchor_y) +
                  " outside [-90, 90]");
        ok = false;
      }
    }
    return ok;
  }

  bool read_coord(std::size_t r, long row, std::size_t idx,
                  const std::string& name, double& out) {
    const Cell& cell = table_.cell(r, idx);
    if (cell.missing) {
      report_missing(row, name);
      return false;
    }
    if (!cell.number) {
      error("NonNumeric", row, name,
            "non-numeric value '" + cell.text + "' in column '" + name + "'");
      return false;
    }
    out = *cell.number;
    return true;
  }

  bool read_size(std::size_t r, long row, std::optional<std::size_t> idx,
                 CompositionRow& comp) {
    if (!idx) return true;
    const Cell& cell = table_.cell(r, *idx);
    if (cell.missing) {
      report_missing(row, *spec_.size_column);
      return false;
    }
    if (!cell.number) {
      error("NonNumeric", row, *spec_.size_column,
            "non-numeric size value '" + cell.text + "'");
      return false;
    }
    comp.size_value = *cell.number;
    return true;
  }

  bool read_facet(std::size_t r, long row, std::optional<std::size_t> idx,
                  CompositionRow& comp) {
    if (!idx) return true;
    const Cell& cell = table_.cell(r, *idx);
    if (cell.missing) {
      report_missing(row, *spec_.facet_column);
      return false;
    }
    comp.facet_key = cell.text;
    return true;
  }

  void error(const char* code, long row, const std::string& column,
             const std::string& message) {
    out_.diagnostics.push_back(
        make_error(code, message, table_.provenance(), row, column));
  }

  void report_missing(long row, const std::string& column) {
    const std::string message = "missing value in column '" + column + "'";
    if (spec_.skip_incomplete_rows) {
      out_.diagnostics.push_back(make_warning(
          "MissingValue", message + "; row skipped", table_.provenance(), row,
          column));
    } else {
      out_.diagnostics.push_back(make_error("MissingValue", message,
                                            table_.provenance(), row, column));
    }
  }

 private:
  const PlotSpec& spec_;
  const DataTable& table_;
  Compositions& out_;
  bool map_mode_;
};

}  // namespace

std::vector<Diagnostic> validate_spec(const PlotSpec& spec,
                                      const DataTable& table) {
  std::vector<Diagnostic> diags;

  if (spec.pie_radius <= 0) {
    diags.push_back(make_error("InvalidRadius", "pie_radius must be > 0",
                               spec.provenance));
  }
  if (spec.width <= 0 || spec.height <= 0) {
    diags.push_back(make_error("InvalidDimensions",
                               "width and height must be > 0",
                               spec.provenance));
  }

  if (const auto* wide = std::get_if<WideSlices>(&spec.slices)) {
    if (wide->columns.empty()) {
      diags.push_back(make_error("EmptySliceSpec",
                                 "at least one slice column is required",
                                 spec.provenance));
    }
  } else {
    const auto& lng = std::get<LongSlices>(spec.slices);
    if (lng.category_column.empty() || lng.value_column.empty()) {
      diags.push_back(make_error(
          "EmptySliceSpec", "long slices need a category and a value column",
          spec.provenance));
    }
    for (const std::string* role : {&spec.x_column, &spec.y_column}) {
      if (*role == lng.category_column || *role == lng.value_column) {
        diags.push_back(make_error(
            "ColumnRoleConflict",
            "column '" + *role + "' cannot be both a position column and a "
            "slice column",
            spec.provenance));
      }
    }
  }

  for (const auto& name : referenced_columns(spec)) {
    check_column_exists(table, name, diags);
  }
  if (has_errors(diags)) return diags;  // cell checks need the columns

  for (const auto& name : numeric_columns(spec)) {
    check_column_numeric(table, name, diags);
  }

  if (spec.map_source && !spec.projection) {
    diags.push_back(make_error(
        "ProjectionRequired", "map_source is set but no projection is named",
        spec.provenance));
  }
  if (spec.projection &&
      !parse_projection(*spec.projection, spec.projection_center)) {
    diags.push_back(make_error(
        "UnknownProjection", "unsupported projection '" + *spec.projection +
                                 "'; expected equirectangular, mercator, or "
                                 "lambert_azimuthal_equal_area",
        spec.provenance));
  }
  return diags;
}

PivotResult pivot_long_to_wide(const DataTable& table,
                               const std::string& category_col,
                               const std::string& value_col,
                               const std::vector<std::string>& group_cols) {
  PivotResult result;
  auto cat_idx = table.column_index(category_col);
  auto val_idx = table.column_index(value_col);
  if (!cat_idx || !val_idx) {
    result.diagnostics.push_back(make_error(
        "MissingColumn", "pivot columns not found", table.provenance()));
    return result;
  }
  std::vector<std::size_t> group_idx;
  for (const auto& g : group_cols) {
    auto idx = table.column_index(g);
    if (!idx) {
      result.diagnostics.push_back(
          make_error("MissingColumn", "group column '" + g + "' not found",
                     table.provenance(), -1, g));
      return result;
    }
    group_idx.push_back(*idx);
  }

  std::vector<std::string> categories;
  std::unordered_map<std::string, std::size_t> category_index;

  struct Group {
    std::vector<Cell> group_cells;
    std::vector<double> sums;
    long first_row;
  };
  std::vector<Group> groups;
  std::map<std::vector<std::string>, std::size_t> group_index;

  for (std::size_t r = 0; r < table.row_count(); ++r) {
    const long row = table.source_row(r);
    const Cell& cat = table.cell(r, *cat_idx);
    const Cell& val = table.cell(r, *val_idx);
    if (cat.missing) {
      result.diagnostics.push_back(
          make_warning("MissingValue", "missing category; pair skipped",
                       table.provenance(), row, category_col));
      continue;
    }
    if (val.missing) {
      result.diagnostics.push_back(
          make_warning("MissingValue", "missing value; pair skipped",
                       table.provenance(), row, value_col));
      continue;
    }
    if (!val.number) {
      result.diagnostics.push_back(make_error(
          "NonNumeric", "non-numeric value '" + val.text + "' in column '" +
                            value_col + "'",
          table.provenance(), row, value_col));
      continue;
    }

    std::vector<std::string> key;
    key.reserve(group_idx.size());
    for (auto gi : group_idx) key.push_back(table.cell(r, gi).text);

    auto [it, inserted] = group_index.try_emplace(key, groups.size());
    if (inserted) {
      Group g;
      g.first_row = row;
      for (auto gi : group_idx) g.group_cells.push_back(table.cell(r, gi));
      groups.push_back(std::move(g));
    }
    Group& group = groups[it->second];

    auto [cit, cat_inserted] =
        category_index.try_emplace(cat.text, categories.size());
    if (cat_inserted) categories.push_back(cat.text);
    const std::size_t ci = cit->second;
    if (group.sums.size() <= ci) group.sums.resize(ci + 1, 0.0);
    group.sums[ci] += *val.number;
  }

  std::vector<std::string> out_columns = group_cols;
  for (const auto& c : categories) {
    if (std::find(out_columns.begin(), out_columns.end(), c) !=
        out_columns.end()) {
      result.diagnostics.push_back(make_error(
          "DuplicateColumn",
          "category value '" + c + "' collides with a group column name",
          table.provenance(), -1, c));
      return result;
    }
    out_columns.push_back(c);
  }

  result.table = DataTable(out_columns, table.provenance());
  for (auto& group : groups) {
    std::vector<Cell> cells = std::move(group.group_cells);
    group.sums.resize(categories.size(), 0.0);
    for (double v : group.sums) {
      Cell cell;
      cell.number = v;
      cell.text = format_number(v, 6);
      cells.push_back(std::move(cell));
    }
    result.table.append_row(std::move(cells), group.first_row);
  }
  return result;
}

Compositions extract_compositions(const PlotSpec& spec,
                                  const DataTable& table) {
  Compositions out;

  if (const auto* wide = std::get_if<WideSlices>(&spec.slices)) {
    RowExtractor extractor(spec, table, out);
    extractor.extract_wide(wide->columns);
    return out;
  }

  const auto& lng = std::get<LongSlices>(spec.slices);
  const auto group_cols = effective_group_columns(spec, lng);

  // Pre-scan so negative and malformed values are reported against their
  // source rows, before summation can hide them.
  auto cat_idx = *table.column_index(lng.category_column);
  auto val_idx = *table.column_index(lng.value_column);
  std::vector<std::size_t> group_idx;
  for (const auto& g : group_cols) group_idx.push_back(*table.column_index(g));

  DataTable filtered(table.columns(), table.provenance());
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    const long row = table.source_row(r);
    bool ok = true;
    const Cell& cat = table.cell(r, cat_idx);
    const Cell& val = table.cell(r, val_idx);
    auto missing = [&](const std::string& column) {
      const std::string message = "missing value in column '" + column + "'";
      if (spec.skip_incomplete_rows) {
        out.diagnostics.push_back(make_warning("MissingValue",
                                               message + "; row skipped",
                                               table.provenance(), row, column));
      } else {
        out.diagnostics.push_back(make_error(
            "MissingValue", message, table.provenance(), row, column));
      }
      ok = false;
    };
    if (cat.missing) missing(lng.category_column);
    if (val.missing) {
      missing(lng.value_column);
    } else if (!val.number) {
      out.diagnostics.push_back(make_error(
          "NonNumeric", "non-numeric value '" + val.text + "' in column '" +
                            lng.value_column + "'",
          table.provenance(), row, lng.value_column));
      ok = false;
    } else if (*val.number < 0) {
      out.diagnostics.push_back(make_error(
          "NegativeSliceValue",
          "negative slice value " + format_number(*val.number) +
              " in column '" + lng.value_column + "'",
          table.provenance(), row, lng.value_column));
      ok = false;
    }
    for (std::size_t g = 0; g < group_idx.size(); ++g) {
      if (table.cell(r, group_idx[g]).missing) missing(group_cols[g]);
    }
    if (ok) {
      std::vector<Cell> cells;
      cells.reserve(table.columns().size());
      for (std::size_t c = 0; c < table.columns().size(); ++c) {
        cells.push_back(table.cell(r, c));
      }
      filtered.append_row(std::move(cells), row);
    }
  }
  if (has_errors(out.diagnostics)) return out;

  PivotResult pivoted = pivot_long_to_wide(filtered, lng.category_column,
                                           lng.value_column, group_cols);
  out.diagnostics.insert(out.diagnostics.end(), pivoted.diagnostics.begin(),
                         pivoted.diagnostics.end());
  if (has_errors(pivoted.diagnostics)) return out;

  std::vector<std::string> categories;
  for (std::size_t c = group_cols.size(); c < pivoted.table.columns().size();
       ++c) {
    categories.push_back(pivoted.table.columns()[c]);
  }

  PlotSpec wide_spec = spec;
  wide_spec.slices = WideSlices{categories};
  Compositions wide_out;
  RowExtractor extractor(wide_spec, pivoted.table, wide_out);
  extractor.extract_wide(categories);

  out.categories = std::move(wide_out.categories);
  out.rows = std::move(wide_out.rows);
  out.diagnostics.insert(out.diagnostics.end(), wide_out.diagnostics.begin(),
                         wide_out.diagnostics.end());
  return out;
}

}  // namespace glyphplot
