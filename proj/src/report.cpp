#include "pqszasz/report.hpp"

#include "pqszasz/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

namespace pqszasz {

namespace {

void check_row(const ExperimentReport& report, const std::vector<double>& row)
{
  if (row.size() != report.columns.size()) {
    std::ostringstream msg;
    msg << "report '" << report.name << "': row has " << row.size() << " values, expected "
        << report.columns.size();
    throw ValidationError(msg.str());
  }
  for (std::size_t i = 0; i < row.size(); ++i)
    if (!std::isfinite(row[i]))
      throw ValidationError("report '" + report.name + "': non-finite value in column " +
                            report.columns[i]);
}

} // namespace

void ExperimentReport::add_row(std::vector<double> row)
{
  if (!label_column.empty())
    throw ValidationError("report '" + name + "' requires labeled rows");
  check_row(*this, row);
  rows.push_back(std::move(row));
}

void ExperimentReport::add_labeled_row(std::string label, std::vector<double> row)
{
  if (label_column.empty())
    throw ValidationError("report '" + name + "' has no label column");
  check_row(*this, row);
  rows.push_back(std::move(row));
  labels.push_back(std::move(label));
}

void ExperimentReport::set_meta(std::string key, std::string value)
{
  for (auto& [k, v] : metadata)
    if (k == key) {
      v = std::move(value);
      return;
    }
  metadata.emplace_back(std::move(key), std::move(value));
}

void ExperimentReport::set_meta(std::string key, double value)
{
  set_meta(std::move(key), format_real(value));
}

std::string ExperimentReport::meta(std::string_view key) const
{
  for (const auto& [k, v] : metadata)
    if (k == key)
      return v;
  return {};
}

std::size_t ExperimentReport::column(std::string_view col) const
{
  const auto it = std::find(columns.begin(), columns.end(), col);
  if (it == columns.end())
    throw ValidationError("report '" + name + "' has no column '" + std::string(col) + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> ExperimentReport::column_values(std::string_view col) const
{
  const std::size_t c = column(col);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows)
    out.push_back(r[c]);
  return out;
}

std::string format_real(double v)
{
  if (v == 0.0)
    return "0"; // folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view s)
{
  if (s.find_first_of(",\"\r\n") == std::string_view::npos)
    return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv(const ExperimentReport& report, std::ostream& out)
{
  out << "# experiment=" << report.name << '\n';
  for (const auto& [k, v] : report.metadata)
    out << "# " << k << '=' << v << '\n';

  bool first = true;
  auto sep = [&] {
    if (!first)
      out << ',';
    first = false;
  };
  if (!report.label_column.empty()) {
    sep();
    out << csv_field(report.label_column);
  }
  for (const auto& c : report.columns) {
    sep();
    out << csv_field(c);
  }
  out << '\n';

  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    first = true;
    if (!report.label_column.empty()) {
      sep();
      out << csv_field(report.labels[r]);
    }
    for (double v : report.rows[r]) {
      sep();
      out << format_real(v);
    }
    out << '\n';
  }
}

void write_table(const ExperimentReport& report, std::ostream& out)
{
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header;
  if (!report.label_column.empty())
    header.push_back(report.label_column);
  header.insert(header.end(), report.columns.begin(), report.columns.end());
  cells.push_back(header);
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    std::vector<std::string> line;
    if (!report.label_column.empty())
      line.push_back(report.labels[r]);
    for (double v : report.rows[r])
      line.push_back(format_real(v));
    cells.push_back(std::move(line));
  }

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c)
      width[c] = std::max(width[c], line[c].size());

  out << report.name << '\n';
  for (const auto& [k, v] : report.metadata)
    out << "  " << k << ": " << v << '\n';
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c > 0)
        out << "  ";
      out << std::string(width[c] - line[c].size(), ' ') << line[c];
    }
    out << '\n';
  }
}

} // namespace pqszasz
