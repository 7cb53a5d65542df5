#include "glyphplot/diagnostics.hpp"

#include <algorithm>

namespace glyphplot {

std::string to_string(const Diagnostic& diag) {
  std::string out = diag.severity == Severity::kError ? "error: " : "warning: ";
  if (!diag.file.empty()) {
    out += diag.file;
    if (diag.row >= 0) {
      out += ':';
      out += std::to_string(diag.row);
    }
    out += ": ";
  } else if (diag.row >= 0) {
    out += "row " + std::to_string(diag.row) + ": ";
  }
  out += diag.message;
  out += " [" + diag.code + "]";
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.severity == Severity::kError;
  });
}

bool has_code(const std::vector<Diagnostic>& diags, std::string_view code) {
  return std::any_of(diags.begin(), diags.end(),
                     [&](const Diagnostic& d) { return d.code == code; });
}

}  // namespace glyphplot
