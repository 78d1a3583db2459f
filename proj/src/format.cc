#include "argannot/format.h"

#include <cmath>
#include <cstdio>

#include "argannot/error.h"

namespace argannot {

OutputFormat ParseOutputFormat(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "md") return OutputFormat::kMarkdown;
  throw Error(ErrorCode::kParseError,
              "unknown format '" + std::string(name) + "' (json, csv, md)");
}

std::string_view Render(OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kMarkdown: return "md";
  }
  return "json";
}

double Percent(size_t part, size_t whole) {
  if (whole == 0) return 0.0;
  // Integer rounding of tenths keeps the result independent of how the
  // quotient happens to be represented in binary.
  size_t tenths = (part * 2000 + whole) / (2 * whole);
  return static_cast<double>(tenths) / 10.0;
}

long IntegerPercent(size_t part, size_t whole) {
  if (whole == 0) return 0;
  return static_cast<long>((part * 200 + whole) / (2 * whole));
}

std::string FormatPercent(double pct) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.1f", pct);
  return buffer;
}

std::string CsvField(std::string_view value) {
  if (value.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(value);
  }
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace argannot
