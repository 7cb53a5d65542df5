#include "glyphplot/table.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <unordered_set>

namespace glyphplot {

std::optional<double> parse_number(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
    --end;
  }
  if (begin == end) return std::nullopt;
  std::string_view body = text.substr(begin, end - begin);
  if (body.front() == '+') body.remove_prefix(1);
  if (body.empty()) return std::nullopt;
  double value = 0.0;
  const char* first = body.data();
  const char* last = body.data() + body.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

Cell make_cell(std::string text) {
  Cell cell;
  cell.missing = text.empty();
  cell.number = cell.missing ? std::nullopt : parse_number(text);
  cell.text = std::move(text);
  return cell;
}

DataTable::DataTable(std::vector<std::string> columns, std::string provenance)
    : columns_(std::move(columns)), provenance_(std::move(provenance)) {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    index_.emplace(columns_[i], i);
  }
}

void DataTable::append_row(std::vector<Cell> cells, long source_row) {
  cells.resize(columns_.size());
  for (auto& c : cells) {
    if (c.text.empty()) c.missing = true;
  }
  if (source_row < 0) source_row = static_cast<long>(rows_.size()) + 1;
  rows_.push_back(std::move(cells));
  source_rows_.push_back(source_row);
}

std::optional<std::size_t> DataTable::column_index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

// Reads one RFC 4180 record. Returns false at end of input with no data.
bool read_record(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  std::string field;
  bool in_quotes = false;
  bool saw_any = false;
  int c;
  while ((c = in.get()) != EOF) {
    saw_any = true;
    char ch = static_cast<char>(c);
    if (in_quotes) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get();
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(ch);
      }
      continue;
    }
    if (ch == '"' && field.empty()) {
      in_quotes = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      fields.push_back(std::move(field));
      return true;
    } else if (ch == '\r') {
      if (in.peek() == '\n') in.get();
      fields.push_back(std::move(field));
      return true;
    } else {
      field.push_back(ch);
    }
  }
  if (!saw_any) return false;
  fields.push_back(std::move(field));
  return true;
}

}  // namespace

CsvResult read_csv(std::istream& in, std::string provenance) {
  CsvResult result;
  std::vector<std::string> fields;
  if (!read_record(in, fields)) {
    result.diagnostics.push_back(
        make_error("EmptyCsv", "no header record found", provenance));
    return result;
  }

  std::unordered_set<std::string> seen;
  for (const auto& name : fields) {
    if (!seen.insert(name).second) {
      result.diagnostics.push_back(make_error(
          "DuplicateColumn", "duplicate column name '" + name + "'",
          provenance, 0, name));
    }
  }
  result.table = DataTable(fields, provenance);
  if (has_errors(result.diagnostics)) return result;

  const std::size_t width = result.table.columns().size();
  long row_number = 0;
  while (read_record(in, fields)) {
    ++row_number;
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() != width) {
      result.diagnostics.push_back(make_error(
          "RaggedRow",
          "expected " + std::to_string(width) + " fields, found " +
              std::to_string(fields.size()),
          provenance, row_number));
      continue;
    }
    std::vector<Cell> cells;
    cells.reserve(width);
    for (auto& f : fields) cells.push_back(make_cell(std::move(f)));
    result.table.append_row(std::move(cells), row_number);
  }
  return result;
}

CsvResult read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    CsvResult result;
    result.diagnostics.push_back(
        make_error("FileNotFound", "cannot open data file", path));
    return result;
  }
  return read_csv(in, path);
}

}  // namespace glyphplot
