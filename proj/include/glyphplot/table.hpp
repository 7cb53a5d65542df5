#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "glyphplot/diagnostics.hpp"

namespace glyphplot {

// One table cell. `text` is the raw field; `number` is set when the whole
// trimmed field parses as a finite number. An empty field is missing.
struct Cell {
  std::string text;
  std::optional<double> number;
  bool missing = false;
};

Cell make_cell(std::string text);

// Accepts integer, decimal, and scientific notation; rejects non-finite.
std::optional<double> parse_number(std::string_view text);

// Immutable after ingestion. Rows are numbered 1-based in file order
// (the header is row 0), matching diagnostic output.
class DataTable {
 public:
  DataTable() = default;
  DataTable(std::vector<std::string> columns, std::string provenance);

  // `source_row` is the 1-based data row in the original file; -1 numbers
  // the row sequentially. Kept per row so diagnostics stay correct even
  // when earlier records were skipped.
  void append_row(std::vector<Cell> cells, long source_row = -1);

  const std::vector<std::string>& columns() const { return columns_; }
  std::optional<std::size_t> column_index(std::string_view name) const;
  std::size_t row_count() const { return rows_.size(); }
  const Cell& cell(std::size_t row, std::size_t col) const {
    return rows_[row][col];
  }
  const std::string& provenance() const { return provenance_; }
  long source_row(std::size_t row) const { return source_rows_[row]; }

 private:
  std::vector<std::string> columns_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<long> source_rows_;
  std::string provenance_;
};

struct CsvResult {
  DataTable table;
  std::vector<Diagnostic> diagnostics;
};

// RFC 4180: quoted fields, doubled-quote escapes, CR LF or LF line ends,
// first record is the header. Ragged records and duplicate column names are
// error diagnostics.
CsvResult read_csv(std::istream& in, std::string provenance);
CsvResult read_csv_file(const std::string& path);

}  // namespace glyphplot
