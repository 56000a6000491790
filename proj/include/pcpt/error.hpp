#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcpt {

enum class ErrorCode {
  InvalidPanel,
  EmptyInput,
  NonRectangular,
  NonNumericCell,
  DegenerateSeries,
  InvalidBlockLength,
  IndexOutOfRange,
  InvalidConfig,
  ReplicationBudgetExceeded,
};

const char* to_string(ErrorCode code) noexcept;

/// Base error for everything the library throws on bad input or degenerate data.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// CSV ingestion failure. Row and column are 1-based positions in the file;
/// zero means "not applicable".
class CsvError : public Error {
public:
  CsvError(ErrorCode code, const std::string& what, std::size_t row = 0,
           std::size_t column = 0)
      : Error(code, what), row_(row), column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t row_;
  std::size_t column_;
};

/// A series whose long-run variance estimate is not strictly positive.
class DegenerateSeriesError : public Error {
public:
  explicit DegenerateSeriesError(std::size_t series)
      : Error(ErrorCode::DegenerateSeries,
              "degenerate series " + std::to_string(series) +
                  ": long-run variance estimate is not positive"),
        series_(series) {}

  /// 0-based series index.
  std::size_t series() const noexcept { return series_; }

private:
  std::size_t series_;
};

}  // namespace pcpt
