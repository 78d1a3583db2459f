#ifndef ARGANNOT_FORMAT_H_
#define ARGANNOT_FORMAT_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace argannot {

enum class OutputFormat { kJson, kCsv, kMarkdown };

// "json", "csv" or "md"; throws kParseError otherwise.
OutputFormat ParseOutputFormat(std::string_view name);
std::string_view Render(OutputFormat format);

// 100 * part / whole rounded to one decimal; 0 when whole is 0.
double Percent(size_t part, size_t whole);

// Percent rounded to the nearest integer.
long IntegerPercent(size_t part, size_t whole);

// "%.1f" formatting of a one-decimal percentage.
std::string FormatPercent(double pct);

// Quotes a CSV field when it contains a comma, quote or newline.
std::string CsvField(std::string_view value);

}  // namespace argannot

#endif  // ARGANNOT_FORMAT_H_
