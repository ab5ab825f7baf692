#pragma once

// Tabular experiment output and its CSV / aligned-table writers.

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pqszasz {

struct ExperimentReport {
  std::string name;
  std::vector<std::string> columns;
  /// When non-empty, every row carries a string label printed first under this header.
  std::string label_column;
  std::vector<std::string> labels;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;

  /// Throws ValidationError on a width mismatch or a non-finite value.
  void add_row(std::vector<double> row);
  void add_labeled_row(std::string label, std::vector<double> row);

  void set_meta(std::string key, std::string value);
  void set_meta(std::string key, double value);
  /// Empty string when the key is absent.
  std::string meta(std::string_view key) const;

  std::size_t column(std::string_view col) const;
  std::vector<double> column_values(std::string_view col) const;
};

/// Shortest decimal string that round-trips to the same double.
std::string format_real(double v);

/// RFC-4180 field quoting (only when the field contains , " CR or LF).
std::string csv_field(std::string_view s);

/// '#'-prefixed metadata lines, then a header row, then data rows.
void write_csv(const ExperimentReport& report, std::ostream& out);

/// Same content as aligned whitespace-separated columns.
void write_table(const ExperimentReport& report, std::ostream& out);

} // namespace pqszasz
