#include "pcpt/panel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "pcpt/error.hpp"

namespace pcpt {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPanel: return "InvalidPanel";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonRectangular: return "NonRectangular";
    case ErrorCode::NonNumericCell: return "NonNumericCell";
    case ErrorCode::DegenerateSeries: return "DegenerateSeries";
    case ErrorCode::InvalidBlockLength: return "InvalidBlockLength";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ReplicationBudgetExceeded: return "ReplicationBudgetExceeded";
  }
  return "Unknown";
}

Panel::Panel(std::size_t n_series, std::size_t n_time, std::vector<double> values)
    : n_series_(n_series), n_time_(n_time), values_(std::move(values)) {
  if (n_series_ < 1) {
    throw Error(ErrorCode::InvalidPanel, "panel needs at least one series");
  }
  if (n_time_ < 2) {
    throw Error(ErrorCode::InvalidPanel, "panel needs at least two time points");
  }
  if (values_.size() != n_series_ * n_time_) {
    throw Error(ErrorCode::NonRectangular, "value count does not match N x T");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::InvalidPanel, "panel entries must be finite");
    }
  }
}

Panel Panel::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) {
    throw Error(ErrorCode::InvalidPanel, "panel needs at least one series");
  }
  const std::size_t t = rows.front().size();
  std::vector<double> values;
  values.reserve(rows.size() * t);
  for (const auto& r : rows) {
    if (r.size() != t) {
      throw Error(ErrorCode::NonRectangular, "series have different lengths");
    }
    values.insert(values.end(), r.begin(), r.end());
  }
  return Panel(rows.size(), t, std::move(values));
}

double Panel::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

std::pair<Panel, SeriesMeans> demean_rows(const Panel& p) {
  const std::size_t n = p.n_series();
  const std::size_t t = p.n_time();
  std::vector<double> out(p.values().begin(), p.values().end());
  SeriesMeans m{std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    double* row = out.data() + i * t;
    double sum = 0.0;
    for (std::size_t s = 0; s < t; ++s) sum += row[s];
    const double mean = sum / static_cast<double>(t);
    for (std::size_t s = 0; s < t; ++s) row[s] -= mean;
    m.means[i] = mean;
  }
  return {Panel(n, t, std::move(out)), std::move(m)};
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_number(std::string_view cell, double& out) {
  cell = trim(cell);
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  if (cell.empty()) return false;
  const char* end = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(cell.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return cells;
}

}  // namespace

Panel parse_csv(std::istream& in, CsvLayout layout) {
  std::vector<std::vector<double>> table;
  std::string line;
  std::size_t line_no = 0;
  bool first_content_line = true;
  std::size_t width = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_cells(line);

    if (first_content_line) {
      first_content_line = false;
      double probe = 0.0;
      if (!parse_number(cells.front(), probe)) continue;  // header line
    }

    if (table.empty()) {
      width = cells.size();
    } else if (cells.size() != width) {
      throw CsvError(ErrorCode::NonRectangular,
                     "line " + std::to_string(line_no) + " has " +
                         std::to_string(cells.size()) + " cells, expected " +
                         std::to_string(width),
                     line_no);
    }

    std::vector<double> row(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (!parse_number(cells[c], row[c])) {
        throw CsvError(ErrorCode::NonNumericCell,
                       "non-numeric cell at line " + std::to_string(line_no) +
                           ", column " + std::to_string(c + 1),
                       line_no, c + 1);
      }
    }
    table.push_back(std::move(row));
  }

  if (table.empty()) {
    throw CsvError(ErrorCode::EmptyInput, "no numeric rows in input");
  }

  if (layout == CsvLayout::SeriesPerRow) return Panel::from_rows(table);

  const std::size_t n = width;
  const std::size_t t = table.size();
  std::vector<double> values(n * t);
  for (std::size_t s = 0; s < t; ++s) {
    for (std::size_t i = 0; i < n; ++i) values[i * t + s] = table[s][i];
  }
  return Panel(n, t, std::move(values));
}

Panel load_csv(const std::filesystem::path& path, CsvLayout layout) {
  std::ifstream in(path);
  if (!in) {
    throw CsvError(ErrorCode::EmptyInput, "cannot open " + path.string());
  }
  return parse_csv(in, layout);
}

void write_csv(std::ostream& out, const Panel& p, CsvLayout layout) {
  char buf[64];
  auto put = [&](double v) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v,
                                   std::chars_format::general, 17);
    out.write(buf, ptr - buf);
  };
  const bool by_column = layout == CsvLayout::SeriesPerColumn;
  const std::size_t rows = by_column ? p.n_time() : p.n_series();
  const std::size_t cols = by_column ? p.n_series() : p.n_time();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c > 0) out.put(',');
      put(by_column ? p(c, r) : p(r, c));
    }
    out.put('\n');
  }
}

}  // namespace pcpt
