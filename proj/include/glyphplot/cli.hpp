#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace glyphplot {

// Exit codes: 0 success, 1 validation/render error, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;

// Flags beat spec-file values, which beat built-in defaults; unset optionals
// leave the spec file's choice alone.
struct RunConfig {
  std::string data_path;
  std::string spec_path;
  std::string out_path;
  std::optional<double> width;
  std::optional<double> height;
  std::optional<std::string> projection;
  bool interactive = false;  // flag toggles tooltips on
  std::optional<std::uint64_t> seed;
  bool verbose = false;
};

struct ParsedArgs {
  RunConfig config;
  // Set when parsing already decided the outcome (--help, usage error).
  std::optional<int> exit_code;
  std::string message;  // usage/help text for the caller to print
};

ParsedArgs parse_args(int argc, const char* const* argv);

// Full pipeline: spec file + overrides -> CSV -> optional GeoJSON -> scene
// -> document, written atomically (temp + rename, never a partial file at
// out_path). Diagnostics go to `err` as "severity: file:row: message" lines.
int run(const RunConfig& config, std::ostream& err);

// parse_args + run; the process main.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace glyphplot
