#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace pcpt {

/// N x T panel of observations, stored row-major by series so that the
/// values of one series over time are contiguous.
///
/// Invariants enforced at construction: N >= 1, T >= 2, every entry finite.
/// Indices are 0-based: series i in [0, N), time t in [0, T).
class Panel {
public:
  Panel(std::size_t n_series, std::size_t n_time, std::vector<double> values);

  static Panel from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t n_series() const noexcept { return n_series_; }
  std::size_t n_time() const noexcept { return n_time_; }

  double operator()(std::size_t i, std::size_t t) const noexcept {
    return values_[i * n_time_ + t];
  }

  std::span<const double> row(std::size_t i) const noexcept {
    return {values_.data() + i * n_time_, n_time_};
  }

  std::span<const double> values() const noexcept { return values_; }

  /// Largest absolute entry; used to scale numerical tolerances.
  double max_abs() const noexcept;

  friend bool operator==(const Panel&, const Panel&) = default;

private:
  std::size_t n_series_;
  std::size_t n_time_;
  std::vector<double> values_;
};

struct SeriesMeans {
  std::vector<double> means;
};

/// Subtracts each series' time average. Returns the centred panel and the
/// subtracted means.
std::pair<Panel, SeriesMeans> demean_rows(const Panel& p);

enum class CsvLayout {
  SeriesPerColumn,  ///< one row per time point, one column per series
  SeriesPerRow,     ///< one row per series, one column per time point
};

/// Parses comma-separated numeric text. A first line whose first cell does
/// not parse as a number is treated as a header and skipped. Parsing is
/// locale independent.
Panel parse_csv(std::istream& in, CsvLayout layout);
Panel load_csv(const std::filesystem::path& path, CsvLayout layout);

/// Writes with 17 significant digits so that parse_csv reproduces every
/// value exactly.
void write_csv(std::ostream& out, const Panel& p, CsvLayout layout);

}  // namespace pcpt
