#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "pcpt/panel.hpp"

namespace pcpt {

/// Partial sums of the demeaned series, s(i, t) = sum_{r<=t} (X_{i,r} - mean_i)
/// for t = 1..T-1. Column k of the storage holds t = k + 1.
class CusumProcess {
public:
  CusumProcess(std::size_t n_series, std::size_t n_time, std::vector<double> s);

  std::size_t n_series() const noexcept { return n_series_; }
  std::size_t n_time() const noexcept { return n_time_; }

  /// t is 1-based, 1 <= t <= T-1.
  double operator()(std::size_t i, std::size_t t) const noexcept {
    return s_[i * (n_time_ - 1) + (t - 1)];
  }

  /// The full sum at t = T, which is zero up to rounding.
  double terminal(std::size_t i) const noexcept { return terminal_[i]; }

private:
  friend CusumProcess cusum(const Panel& p);

  std::size_t n_series_;
  std::size_t n_time_;
  std::vector<double> s_;
  std::vector<double> terminal_;
};

CusumProcess cusum(const Panel& p);

/// Maximum of a scanned objective. argmax_t is 1-based in 1..T-1; ties go
/// to the smallest t.
struct StatisticValue {
  double value = 0.0;
  std::size_t argmax_t = 1;
};

/// J^2 = max_t sum_i s(i,t)^2 / T.
StatisticValue j_statistic(const Panel& p);

/// Per-series Bartlett bandwidth: chosen by the adaptive block-length rule
/// on each series alone, one value for every series, or one per series.
struct AutoBandwidth {};
using LrvBandwidth =
    std::variant<AutoBandwidth, std::size_t, std::vector<std::size_t>>;

struct LrvEstimates {
  std::vector<double> sigma2;
  std::vector<std::size_t> bandwidth_used;
};

/// Bartlett kernel long-run variance of each series with 1/T autocovariance
/// normalisation. Throws DegenerateSeriesError for a non-positive estimate.
LrvEstimates bartlett_lrv(const Panel& p, const LrvBandwidth& bandwidth = AutoBandwidth{});

/// H = max_t N^{-1/2} sum_i [ s(i,t)^2 / (sigma_i^2 T) - t(T-t)/T^2 ].
StatisticValue h_statistic(const Panel& p, const LrvEstimates& lrv);
StatisticValue h_statistic(const Panel& p, const LrvBandwidth& bandwidth = AutoBandwidth{});

}  // namespace pcpt
