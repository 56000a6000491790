#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "pcpt/error.hpp"
#include "pcpt/panel.hpp"

using namespace pcpt;

namespace {

Panel parse(const std::string& text, CsvLayout layout) {
  std::istringstream in(text);
  return parse_csv(in, layout);
}

ErrorCode parse_error(const std::string& text) {
  try {
    parse(text, CsvLayout::SeriesPerColumn);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::InvalidPanel;
}

}  // namespace

TEST(Panel, RejectsDegenerateShapes) {
  EXPECT_THROW(Panel(0, 5, {}), Error);
  EXPECT_THROW(Panel(1, 1, {1.0}), Error);
  EXPECT_THROW(Panel(2, 2, {1.0, 2.0, 3.0}), Error);
  EXPECT_THROW(Panel(1, 2, {1.0, std::numeric_limits<double>::quiet_NaN()}), Error);
  EXPECT_THROW(Panel(1, 2, {1.0, std::numeric_limits<double>::infinity()}), Error);
  EXPECT_THROW(Panel::from_rows({{1.0, 2.0}, {3.0}}), Error);
}

TEST(PanelCsv, SeriesPerColumnDimensions) {
  const auto p = parse("1,2,3\n4,5,6\n7,8,9\n10,11,12\n13,14,15\n", CsvLayout::SeriesPerColumn);
  EXPECT_EQ(p.n_series(), 3u);
  EXPECT_EQ(p.n_time(), 5u);
  EXPECT_EQ(p(0, 0), 1.0);
  EXPECT_EQ(p(2, 4), 15.0);
  EXPECT_EQ(p(1, 3), 11.0);
}

TEST(PanelCsv, SeriesPerRowReadBack) {
  const auto p = parse("1,2\n3,4\n", CsvLayout::SeriesPerRow);
  EXPECT_EQ(p.n_series(), 2u);
  EXPECT_EQ(p.n_time(), 2u);
  EXPECT_EQ(p(0, 0), 1.0);
  EXPECT_EQ(p(0, 1), 2.0);
  EXPECT_EQ(p(1, 0), 3.0);
}

TEST(PanelCsv, HeaderAutoDetectedAndWhitespaceTolerated) {
  const auto p = parse("a,b\r\n 1.5 , -2e-3\r\n+3,4\r\n\n", CsvLayout::SeriesPerColumn);
  EXPECT_EQ(p.n_series(), 2u);
  EXPECT_EQ(p.n_time(), 2u);
  EXPECT_EQ(p(0, 0), 1.5);
  EXPECT_EQ(p(1, 0), -2e-3);
  EXPECT_EQ(p(0, 1), 3.0);
}

TEST(PanelCsv, Errors) {
  EXPECT_EQ(parse_error("1,2\n3,NaN\n"), ErrorCode::NonNumericCell);
  EXPECT_EQ(parse_error("1,2\n3,inf\n"), ErrorCode::NonNumericCell);
  EXPECT_EQ(parse_error("1,2\n3,4,5\n"), ErrorCode::NonRectangular);
  EXPECT_EQ(parse_error(""), ErrorCode::EmptyInput);
  EXPECT_EQ(parse_error("x,y\n"), ErrorCode::EmptyInput);
  EXPECT_EQ(parse_error("1,2\n3,1,5\n"), ErrorCode::NonRectangular);
  // a comma decimal separator is not a number
  EXPECT_EQ(parse_error("1;5\n2;5\n"), ErrorCode::NonNumericCell);
}

TEST(PanelCsv, NonNumericCellReportsPosition) {
  try {
    parse("x,y\n1,2\n3,abc\n", CsvLayout::SeriesPerColumn);
    FAIL();
  } catch (const CsvError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonNumericCell);
    EXPECT_EQ(e.row(), 3u);
    EXPECT_EQ(e.column(), 2u);
  }
}

TEST(PanelCsv, MissingFileIsAnInputError) {
  EXPECT_THROW(load_csv("/nonexistent/panel.csv", CsvLayout::SeriesPerColumn), CsvError);
}

TEST(PanelCsv, RoundTripIsBitExact) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> mag(-300.0, 300.0);
  std::normal_distribution<double> d;
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 1 + gen() % 6;
    const std::size_t t = 2 + gen() % 30;
    std::vector<double> v(n * t);
    for (double& x : v) x = d(gen) * std::pow(10.0, mag(gen));
    const Panel p(n, t, v);
    for (auto layout : {CsvLayout::SeriesPerColumn, CsvLayout::SeriesPerRow}) {
      std::stringstream buf;
      write_csv(buf, p, layout);
      EXPECT_EQ(parse_csv(buf, layout), p);
    }
  }
}

TEST(Demean, ConstantRow) {
  const auto [d, m] = demean_rows(Panel::from_rows({{1, 1, 1, 1}}));
  for (std::size_t t = 0; t < 4; ++t) EXPECT_EQ(d(0, t), 0.0);
  EXPECT_EQ(m.means[0], 1.0);
}

TEST(Demean, HandValues) {
  const auto [d, m] = demean_rows(Panel::from_rows({{0, 0, 0, 1}}));
  EXPECT_DOUBLE_EQ(d(0, 0), -0.25);
  EXPECT_DOUBLE_EQ(d(0, 1), -0.25);
  EXPECT_DOUBLE_EQ(d(0, 2), -0.25);
  EXPECT_DOUBLE_EQ(d(0, 3), 0.75);
  EXPECT_DOUBLE_EQ(m.means[0], 0.25);
}

TEST(Demean, Idempotent) {
  const auto p = oracle::random_panel(4, 37, 11, 5.0);
  const auto once = demean_rows(p).first;
  const auto twice = demean_rows(once).first;
  for (std::size_t i = 0; i < p.n_series(); ++i) {
    for (std::size_t t = 0; t < p.n_time(); ++t) EXPECT_NEAR(once(i, t), twice(i, t), 1e-12);
  }
}

TEST(Demean, RowSumsVanishOnRandomPanels) {
  std::mt19937 gen(5);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 1 + gen() % 20;
    const std::size_t t = 2 + gen() % 199;
    const auto p = oracle::random_panel(n, t, gen(), 1.0 + gen() % 100);
    const auto [d, m] = demean_rows(p);
    ASSERT_EQ(m.means.size(), n);
    const double tol = 1e-9 * static_cast<double>(t) * p.max_abs();
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (double v : d.row(i)) s += v;
      EXPECT_LE(std::abs(s), tol);
      EXPECT_NEAR(m.means[i], oracle::mean(p, i), 1e-12 * p.max_abs());
    }
  }
}
