#include "pcpt/stats.hpp"

#include <cmath>

#include "pcpt/blocklen.hpp"
#include "pcpt/error.hpp"

namespace pcpt {

CusumProcess::CusumProcess(std::size_t n_series, std::size_t n_time,
                           std::vector<double> s)
    : n_series_(n_series), n_time_(n_time), s_(std::move(s)),
      terminal_(n_series, 0.0) {}

CusumProcess cusum(const Panel& p) {
  const std::size_t n = p.n_series();
  const std::size_t t = p.n_time();
  CusumProcess out(n, t, std::vector<double>(n * (t - 1)));
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = p.row(i);
    double sum = 0.0;
    for (double v : x) sum += v;
    const double mean = sum / static_cast<double>(t);
    double* dst = out.s_.data() + i * (t - 1);
    double acc = 0.0;
    for (std::size_t r = 0; r + 1 < t; ++r) {
      acc += x[r] - mean;
      dst[r] = acc;
    }
    out.terminal_[i] = acc + (x[t - 1] - mean);
  }
  return out;
}

namespace {

StatisticValue argmax(const std::vector<double>& objective) {
  StatisticValue best{objective.front(), 1};
  for (std::size_t k = 1; k < objective.size(); ++k) {
    if (objective[k] > best.value) best = {objective[k], k + 1};
  }
  return best;
}

}  // namespace

StatisticValue j_statistic(const Panel& p) {
  const std::size_t n = p.n_series();
  const std::size_t t = p.n_time();
  const auto s = cusum(p);
  std::vector<double> objective(t - 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 1; r < t; ++r) {
      const double v = s(i, r);
      objective[r - 1] += v * v;
    }
  }
  const double inv_t = 1.0 / static_cast<double>(t);
  for (double& v : objective) v *= inv_t;
  return argmax(objective);
}

namespace {

double bartlett_series(std::span<const double> x, std::size_t bandwidth) {
  const std::size_t t = x.size();
  double sum = 0.0;
  for (double v : x) sum += v;
  const double mean = sum / static_cast<double>(t);
  std::vector<double> c(t);
  for (std::size_t r = 0; r < t; ++r) c[r] = x[r] - mean;

  auto autocov = [&](std::size_t lag) {
    double acc = 0.0;
    for (std::size_t r = 0; r + lag < t; ++r) acc += c[r] * c[r + lag];
    return acc / static_cast<double>(t);
  };

  double sigma2 = autocov(0);
  for (std::size_t k = 1; k < bandwidth; ++k) {
    sigma2 += 2.0 * bartlett_weight(static_cast<double>(k),
                                    static_cast<double>(bandwidth)) *
              autocov(k);
  }
  return sigma2;
}

bool is_constant(std::span<const double> x) {
  for (double v : x) {
    if (v != x.front()) return false;
  }
  return true;
}

}  // namespace

LrvEstimates bartlett_lrv(const Panel& p, const LrvBandwidth& bandwidth) {
  const std::size_t n = p.n_series();
  const std::size_t t = p.n_time();
  LrvEstimates out{std::vector<double>(n), std::vector<std::size_t>(n)};

  if (const auto* per = std::get_if<std::vector<std::size_t>>(&bandwidth)) {
    if (per->size() != n) {
      throw Error(ErrorCode::InvalidConfig,
                  "per-series bandwidth vector must have one entry per series");
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto x = p.row(i);
    if (is_constant(x)) throw DegenerateSeriesError(i);

    std::size_t l = 0;
    if (std::holds_alternative<AutoBandwidth>(bandwidth)) {
      l = adaptive_block_length(Panel(1, t, std::vector<double>(x.begin(), x.end())))
              .l_adpt;
    } else if (const auto* fixed = std::get_if<std::size_t>(&bandwidth)) {
      l = *fixed;
    } else {
      l = std::get<std::vector<std::size_t>>(bandwidth)[i];
    }
    if (l < 1 || l >= t) {
      throw Error(ErrorCode::InvalidBlockLength,
                  "Bartlett bandwidth must satisfy 1 <= L < T (got " +
                      std::to_string(l) + ")");
    }

    const double s2 = bartlett_series(x, l);
    if (!(s2 > 0.0)) throw DegenerateSeriesError(i);
    out.sigma2[i] = s2;
    out.bandwidth_used[i] = l;
  }
  return out;
}

StatisticValue h_statistic(const Panel& p, const LrvEstimates& lrv) {
  const std::size_t n = p.n_series();
  const std::size_t t = p.n_time();
  if (lrv.sigma2.size() != n) {
    throw Error(ErrorCode::InvalidConfig, "LRV estimates do not match the panel");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(lrv.sigma2[i] > 0.0)) throw DegenerateSeriesError(i);
  }

  const auto s = cusum(p);
  const double td = static_cast<double>(t);
  std::vector<double> objective(t - 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double scale = 1.0 / (lrv.sigma2[i] * td);
    for (std::size_t r = 1; r < t; ++r) {
      const double v = s(i, r);
      const double rd = static_cast<double>(r);
      objective[r - 1] += v * v * scale - rd * (td - rd) / (td * td);
    }
  }
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (double& v : objective) v *= norm;
  return argmax(objective);
}

StatisticValue h_statistic(const Panel& p, const LrvBandwidth& bandwidth) {
  return h_statistic(p, bartlett_lrv(p, bandwidth));
}

}  // namespace pcpt
