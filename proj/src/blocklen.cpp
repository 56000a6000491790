#include "pcpt/blocklen.hpp"

#include <algorithm>
#include <cmath>

#include "pcpt/error.hpp"

namespace pcpt {

double bartlett_weight(double k, double bandwidth) noexcept {
  const double u = std::abs(k / bandwidth);
  return u <= 1.0 ? 1.0 - u : 0.0;
}

std::size_t pilot_bandwidth(std::size_t t) noexcept {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(t)));
  while (r * r < t) ++r;
  while (r > 1 && (r - 1) * (r - 1) >= t) --r;
  return r;
}

std::size_t fallback_block_length(std::size_t t) noexcept {
  auto r = static_cast<std::size_t>(std::cbrt(static_cast<double>(t)));
  while (r * r * r < t) ++r;
  while (r > 1 && (r - 1) * (r - 1) * (r - 1) >= t) --r;
  return std::max<std::size_t>(r, 1);
}

LagCovMatrices lag_cov(const Panel& p, std::size_t l0) {
  const std::size_t t = p.n_time();
  if (l0 < 1 || l0 > t) {
    throw Error(ErrorCode::InvalidConfig, "lag_cov requires 1 <= l0 <= T");
  }
  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const auto centred = demean_rows(p).first;
  const Eigen::Map<const RowMajor> y(centred.values().data(),
                                     static_cast<Eigen::Index>(p.n_series()),
                                     static_cast<Eigen::Index>(t));
  const double inv_t = 1.0 / static_cast<double>(t);

  LagCovMatrices out;
  out.v.reserve(l0);
  for (std::size_t lag = 0; lag < l0; ++lag) {
    const auto len = static_cast<Eigen::Index>(t - lag);
    Eigen::MatrixXd v = y.leftCols(len) * y.rightCols(len).transpose();
    out.v.push_back(v * inv_t);
  }
  return out;
}

BlockLengthSelection select_from_cp(std::size_t t, std::size_t l0,
                                    Eigen::MatrixXd cp0, Eigen::MatrixXd cp1) {
  BlockLengthSelection sel;
  sel.l0 = l0;
  const double td = static_cast<double>(t);
  sel.numerator = 3.0 * td * std::abs(cp1.sum());
  sel.denominator = cp0.sum() + cp0.diagonal().array().square().sum();
  sel.cp0 = std::move(cp0);
  sel.cp1 = std::move(cp1);

  const std::size_t upper = std::max<std::size_t>(t / 2, 1);
  if (!(sel.denominator > 0.0)) {
    sel.fallback = true;
    sel.raw = 0.0;
    sel.l_adpt = std::clamp<std::size_t>(fallback_block_length(t), 1, upper);
    return sel;
  }
  sel.raw = std::pow(sel.numerator / sel.denominator, 0.2);
  const double up = std::ceil(sel.raw);
  const double clamped = std::clamp(up, 1.0, static_cast<double>(upper));
  sel.l_adpt = static_cast<std::size_t>(clamped);
  return sel;
}

BlockLengthSelection select_from_lag_cov(std::size_t t, const LagCovMatrices& lc) {
  if (lc.v.empty()) {
    throw Error(ErrorCode::InvalidConfig, "need at least V_1");
  }
  const std::size_t l0 = lc.v.size();
  const auto n = lc.v[0].rows();
  Eigen::MatrixXd cp0 = lc.v[0];
  Eigen::MatrixXd cp1 = Eigen::MatrixXd::Zero(n, n);
  const double l0d = static_cast<double>(l0);
  for (std::size_t k = 1; k < l0; ++k) {
    const double w = bartlett_weight(static_cast<double>(k), l0d);
    cp0 += (2.0 * w) * lc.v[k];
    cp1 += (2.0 * static_cast<double>(k) * w) * lc.v[k];
  }
  return select_from_cp(t, l0, std::move(cp0), std::move(cp1));
}

BlockLengthSelection adaptive_block_length(const Panel& p) {
  const std::size_t t = p.n_time();
  if (t < 4) {
    throw Error(ErrorCode::InvalidConfig,
                "adaptive block length needs at least 4 time points");
  }
  return select_from_lag_cov(t, lag_cov(p, pilot_bandwidth(t)));
}

}  // namespace pcpt
