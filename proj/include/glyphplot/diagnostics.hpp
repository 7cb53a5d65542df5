#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glyphplot {

enum class Severity { kWarning, kError };

// One data-level problem, carrying enough source coordinates for the CLI to
// print "severity: file:row: message" lines.
struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;     // stable identifier, e.g. "NegativeSliceValue"
  std::string file;     // source file when known
  long row = -1;        // 1-based data row, -1 when not row-specific
  std::string column;   // offending column name when applicable
  std::string message;
};

inline Diagnostic make_error(std::string code, std::string message,
                             std::string file = {}, long row = -1,
                             std::string column = {}) {
  return Diagnostic{Severity::kError, std::move(code), std::move(file), row,
                    std::move(column), std::move(message)};
}

inline Diagnostic make_warning(std::string code, std::string message,
                               std::string file = {}, long row = -1,
                               std::string column = {}) {
  return Diagnostic{Severity::kWarning, std::move(code), std::move(file), row,
                    std::move(column), std::move(message)};
}

std::string to_string(const Diagnostic& diag);

bool has_errors(const std::vector<Diagnostic>& diags);

bool has_code(const std::vector<Diagnostic>& diags, std::string_view code);

// Thrown by operations whose preconditions are violated by the caller.
// `code` is a stable identifier such as "FullCircleSector" or "AntipodePole".
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace glyphplot
